#!/usr/bin/env python3
"""Writes data/catalog.json.

Models are written in plane or quadric coordinates: classes are strings like
"2h-e1-e2" or "h1+h2-e3" and are expanded to integer vectors here.
"""
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

TERM = re.compile(r"([+-]?)(\d*)(h1|h2|h|e\d+)")


class Lattice:
    def __init__(self, kind, n, triples=(), diag=(), conic=False, near=()):
        self.kind, self.n = kind, n
        self.triples, self.diag, self.conic, self.near = list(triples), list(diag), conic, list(near)

    @property
    def off(self):
        return 1 if self.kind == "plane" else 2

    def vec(self, s):
        s = s.replace(" ", "")
        v = [0] * (self.off + self.n)
        pos = 0
        for m in TERM.finditer(s):
            if m.start() != pos:
                raise ValueError(f"bad class {s!r}")
            pos = m.end()
            k = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
            name = m.group(3)
            if name == "h" and self.kind == "plane":
                i = 0
            elif name in ("h1", "h2") and self.kind == "quadric":
                i = int(name[1]) - 1
            elif name.startswith("e"):
                i = self.off + int(name[1:]) - 1
                if int(name[1:]) > self.n:
                    raise ValueError(f"{name} out of range in {s!r}")
            else:
                raise ValueError(f"{name} not in a {self.kind} lattice")
            v[i] += k
        if pos != len(s):
            raise ValueError(f"bad class {s!r}")
        return [str(x) for x in v]

    def json(self):
        j = {"kind": self.kind, "n": self.n, "colinearTriples": self.triples, "onDiagonal": self.diag}
        if self.conic:
            j["onConic"] = True
        if self.near:
            j["infinitelyNear"] = self.near
        return j


def plane(n, **kw):
    return Lattice("plane", n, **kw)


def quadric(n, **kw):
    return Lattice("quadric", n, **kw)


def weight(s):
    """'b', 'c', '2c', 'b+c', '2b+2c' -> {"b": int, "c": int}"""
    out = {"b": 0, "c": 0}
    for m in re.finditer(r"(\d*)([bc])", s.replace(" ", "")):
        out[m.group(2)] += int(m.group(1) or 1)
    return out


class Comp:
    def __init__(self, cid, lat, eckardt_allowed=None):
        self.id, self.lat = cid, lat
        self.boundary, self.conductors, self.nodes, self.eck = [], [], [], []
        self.allowed = eckardt_allowed

    def line(self, cls, w, role=None):
        if role is None:
            role = "marked-line" if w == "b" else "ordinary-line"
        self.boundary.append({"class": self.lat.vec(cls), "weight": weight(w), "role": role})
        return self

    def lines(self, classes, w="c"):
        for c in classes:
            self.line(c, w)
        return self

    def cond(self, cls, gid):
        self.conductors.append({"class": self.lat.vec(cls), "gluingId": gid})
        return self

    def node(self, cls):
        self.nodes.append(self.lat.vec(cls))
        return self

    def bref(self, cls, w=None):
        """Boundary index of the curve with class `cls` (and weight w)."""
        v = self.lat.vec(cls)
        for i, b in enumerate(self.boundary):
            if b["class"] == v and (w is None or b["weight"] == weight(w)):
                return i
        raise KeyError(f"{self.id}: no boundary curve {cls}")

    def cref(self, gid):
        for i, c in enumerate(self.conductors):
            if c["gluingId"] == gid:
                return i
        raise KeyError(f"{self.id}: no conductor {gid}")

    def json(self):
        j = {"id": self.id, "lattice": self.lat.json(), "boundary": self.boundary, "conductors": self.conductors,
             "a1Nodes": self.nodes, "eckardt": self.eck}
        if self.allowed is not None:
            j["eckardtAllowed"] = self.allowed
        return j


class Model:
    def __init__(self, label):
        self.label = label
        self.comps, self.gluings, self.points = [], [], []

    def add(self, comp):
        self.comps.append(comp)
        return comp

    def comp(self, cid):
        return next(c for c in self.comps if c.id == cid)

    def glue(self, a, b, gid):
        self.gluings.append({"a": {"component": a, "gluingId": gid}, "b": {"component": b, "gluingId": gid},
                             "selfInvolution": False})

    def point(self, cid, curves, at_a1=False):
        """curves: list of class strings (boundary) or ("cond", gid)."""
        c = self.comp(cid)
        refs = []
        for x in curves:
            if isinstance(x, tuple):
                refs.append({"kind": "conductor", "index": c.cref(x[1])})
            else:
                refs.append({"kind": "boundary", "index": c.bref(x)})
        self.points.append({"component": cid, "curves": refs, "atA1": at_a1})

    def json(self):
        return {"typeLabel": self.label, "components": [c.json() for c in self.comps], "gluings": self.gluings,
                "points": self.points}


def frac(x):
    return str(Fraction(x))


def con(q0, qb, qc, rel):
    return {"q0": frac(q0), "qb": frac(qb), "qc": frac(qc), "rel": rel}


def parse_con(s):
    """'c > 2/3', 'c <= -b/3 + 1/3', 'b = c', '10c - b - 1 > 0' -> constraint dict."""
    m = re.match(r"^(.*?)(>=|<=|>|<|=)(.*)$", s.replace(" ", ""))
    lhs, op, rhs = m.group(1), m.group(2), m.group(3)

    def lin(e):
        out = [Fraction(0)] * 3
        pos = 0
        for t in re.finditer(r"([+-]?)(\d+(?:/\d+)?)?([bc])?(?:/(\d+))?", e):
            if not t.group(0):
                continue
            if t.start() != pos:
                raise ValueError(f"bad expression {e!r}")
            pos = t.end()
            k = Fraction(t.group(2)) if t.group(2) else Fraction(1)
            if t.group(4):
                k /= int(t.group(4))
            if t.group(1) == "-":
                k = -k
            out[{"b": 1, "c": 2, None: 0}[t.group(3)]] += k
        if pos != len(e):
            raise ValueError(f"bad expression {e!r}")
        return out

    lv, rv = lin(lhs), lin(rhs)
    d = [lv[i] - rv[i] for i in range(3)]
    if op in ("<", "<="):
        d = [-x for x in d]
    rel = {">": "GT", "<": "GT", ">=": "GE", "<=": "GE", "=": "EQ"}[op]
    return con(d[0], d[1], d[2], rel)


def region(*cs):
    return [parse_con(c) for c in cs]


def wall(s):
    c = parse_con(s)
    c["rel"] = "EQ"
    return c


def step(tag, comp, **kw):
    j = {"tag": tag, "component": comp}
    j.update(kw)
    return j


def blow_down(comp, lat, *classes):
    return step("BlowDownMinusOne", comp, classes=[lat.vec(c) for c in classes])


def to_point(comp):
    return step("ContractComponentToPoint", comp)


def ruling(comp, lat, cls, absorbing=None, tag="ContractRulingToCurve"):
    j = step(tag, comp, classes=[lat.vec(cls)])
    if absorbing:
        j["absorbing"] = absorbing
    return j


def nodes(comp, lat, *classes):
    return step("ContractMinusTwoToNode", comp, classes=[lat.vec(c) for c in classes])


def transition(frm, to, w, side, steps, variant=None):
    j = {"fromStep": frm, "wall": wall(w), "side": side, "steps": steps, "toStep": to}
    if variant:
        j["variant"] = variant
    return j


# ---------------------------------------------------------------------------
# Lines on a blow-up of P^2 at six points.

def cubic_lines(extra=None):
    """27 lines of Bl_6 P^2 as class strings; `extra` maps a line to the blown-up points it passes through."""
    extra = extra or {}
    out = [f"e{i}" for i in range(1, 7)]
    out += [f"h-e{i}-e{j}" for i in range(1, 7) for j in range(i + 1, 7)]
    out += ["2h" + "".join(f"-e{k}" for k in range(1, 7) if k != j) for j in range(1, 7)]
    return [s + extra.get(s, "") for s in out]


SMOOTH_ECK = [0, 1, 2, 3, 4, 6, 9, 10, 18]


def smooth_entry(variant):
    # Cubic blown up at one Eckardt point p = l12 n l34 n l56; the plane E is glued along e7.
    lat = plane(7, triples=[[1, 2, 7], [3, 4, 7], [5, 6, 7]])
    through = {"h-e1-e2": "-e7", "h-e3-e4": "-e7", "h-e5-e6": "-e7"}
    ell = "e1" if variant == "A" else "h-e1-e2-e7"
    m = Model("smooth")
    x = m.add(Comp("X", lat))
    for cls in cubic_lines(through):
        x.line(cls, "b" if cls == ell else "c")
    x.cond("e7", "g1")
    e = m.add(Comp("E", plane(0)))
    for w in (["c", "c", "c"] if variant == "A" else ["b", "c", "c"]):
        e.line("h", w)
    e.cond("h", "g1")
    m.glue("X", "E", "g1")
    w = "c = 2/3" if variant == "A" else "c = -b/2 + 1"
    steps = [to_point("E"), blow_down("X", lat, "e7")]
    return {
        "typeLabel": "smooth", "ellChoice": "", "variant": variant, "seedModel": m.json(),
        "eckardtOptions": {"X": SMOOTH_ECK},
        "transitions": [transition("0", "1", w, "below", steps)],
        "expectedChamberCount": 3,
        "expectedWalls": [wall("c = 2/3"), wall("c = -b/2 + 1")],
        "expectedChambers": [
            {"label": "Sch 2/3<c<=1", "region": region("c > 2/3")},
            {"label": "-b/2+1<c<=2/3", "region": region("c <= 2/3", "c > -b/2 + 1")},
            {"label": "Sch 1/9<c<=2/3", "region": region("c <= -b/2 + 1")},
        ],
        "notes": "variant A: Eckardt point off the marked line; variant B: on it",
    }


# ---------------------------------------------------------------------------
# D~_A1: the plane A (six points on a conic, ell-type lines l_ij), the quadric Q
# (six points on the diagonal) and six copies F_j of P1 x P1, glued A.C = Q.diag,
# A.e_j = F_j.h1, Q.e_j = F_j.h2.

def l(i, j):
    return f"h-e{i}-e{j}"


DA1_ECK = [0, 1, 2, 3, 4, 6]


def da1_seed(ell, label):
    """ell: ("A", i, j) for a line l_ij on A, or ("Q", j) for the Q line h1-e_j plus the F_j fibre."""
    lat_a = plane(7, conic=True, triples=[[1, 2, 7], [3, 4, 7], [5, 6, 7]])
    through = {l(1, 2), l(3, 4), l(5, 6)}
    m = Model(label)
    a = m.add(Comp("1", lat_a, DA1_ECK))
    for i in range(1, 7):
        for j in range(i + 1, 7):
            cls = l(i, j) + ("-e7" if l(i, j) in through else "")
            a.line(cls, "b" if ell == ("A", i, j) else "c")
    a.cond("2h-e1-e2-e3-e4-e5-e6", "gQ")
    for j in range(1, 7):
        a.cond(f"e{j}", f"gA{j}")
    a.cond("e7", "gE")

    lat_q = quadric(6, diag=[1, 2, 3, 4, 5, 6])
    q = m.add(Comp("2", lat_q, [0]))
    for j in range(1, 7):
        q.line(f"h1-e{j}", "b" if ell == ("Q", j) else "c")
        q.line(f"h2-e{j}", "c")
    q.cond("h1+h2-e1-e2-e3-e4-e5-e6", "gQ")
    for j in range(1, 7):
        q.cond(f"e{j}", f"gQ{j}")

    for j in range(1, 7):
        f = m.add(Comp(f"3{'abcdef'[j - 1]}", quadric(0), [0]))
        f.line("h1", "b" if ell == ("Q", j) else "c")
        f.line("h1", "c")
        for i in range(1, 7):
            if i != j:
                f.line("h2", "b" if ell in (("A", i, j), ("A", j, i)) else "c")
        f.cond("h1", f"gA{j}")
        f.cond("h2", f"gQ{j}")
        m.glue("1", f.id, f"gA{j}")
        m.glue("2", f.id, f"gQ{j}")
    m.glue("1", "2", "gQ")

    e = m.add(Comp("E", plane(0)))
    for i, j in ((1, 2), (3, 4), (5, 6)):
        e.line("h", "b" if ell == ("A", i, j) else "c")
    e.cond("h", "gE")
    m.glue("1", "E", "gE")
    return m, lat_a, lat_q


def F(j):
    return f"3{'abcdef'[j - 1]}"


def da1_smooth_entry(variant):
    ell = ("A", 1, 3) if variant == "A" else ("A", 1, 2)
    m, lat_a, lat_q = da1_seed(ell, "DA1")
    qf = quadric(0)
    ts = [
        transition("0", "1", "c = 2/3" if variant == "A" else "c = -b/2 + 1", "below",
                   [to_point("E"), blow_down("1", lat_a, "e7")]),
        transition("1", "2", "c = 1/2", "below",
                   [ruling(F(j), qf, "h2", absorbing="1") for j in range(1, 7)]
                   + [blow_down("2", lat_q, *[f"e{j}" for j in range(1, 7)])]),
        transition("2", "3", "c = 1/6", "below", [to_point("2"), nodes("1", plane(6, conic=True), "2h-e1-e2-e3-e4-e5-e6")]),
    ]
    return {
        "typeLabel": "DA1", "ellChoice": "ell-smooth", "variant": variant, "seedModel": m.json(),
        "eckardtOptions": {"1": DA1_ECK, "2": [0]},
        "transitions": ts,
        "expectedChamberCount": 5,
        "expectedWalls": [wall("c = 2/3"), wall("c = -b/2 + 1"), wall("c = 1/2"), wall("c = 1/6")],
        "expectedChambers": [
            {"label": "Sch 2/3<c<=1", "region": region("c > 2/3")},
            {"label": "-b/2+1<c<=2/3", "region": region("c <= 2/3", "c > -b/2 + 1")},
            {"label": "Sch 1/2<c<=2/3", "region": region("c > 1/2", "c <= -b/2 + 1")},
            {"label": "Sch 1/6<c<=1/2", "region": region("c > 1/6", "c <= 1/2")},
            {"label": "Sch 1/9<c<=1/6", "region": region("c <= 1/6")},
        ],
        "notes": "variant A: Eckardt point off the marked line; variant B: on it",
    }


def da1_node_entry():
    m, lat_a, lat_q = da1_seed(("Q", 1), "DA1")
    qf = quadric(0)
    a6 = plane(6, conic=True)
    ts = [
        transition("0", "1", "c = 2/3", "below", [to_point("E"), blow_down("1", lat_a, "e7")]),
        transition("1", "2", "c = 1/2", "below",
                   [ruling(F(j), qf, "h2", absorbing="1") for j in range(2, 7)]
                   + [blow_down("2", lat_q, *[f"e{j}" for j in range(2, 7)])]),
        transition("2", "3", "c = -b + 1", "below", [ruling(F(1), qf, "h2", absorbing="1"), blow_down("2", quadric(1), "e1")]),
        transition("2", "4", "c = 1/5", "below",
                   [ruling(F(1), qf, "h1", absorbing="2", tag="ContractComponentToCurve"), blow_down("1", a6, "e1")]),
        transition("3", "5", "c = b/4", "below", [blow_down("1", a6, "e1")]),
        transition("3", "6", "c = 1/6", "below",
                   [ruling("2", quadric(0), "h1", absorbing="1", tag="ContractComponentToCurve")]),
        transition("6", "7", "b = c", "below", [nodes("1", a6, "2h-e1-e2-e3-e4-e5-e6")]),
    ]
    return {
        "typeLabel": "DA1", "ellChoice": "ell-one-node", "variant": "", "seedModel": m.json(),
        "eckardtOptions": {"1": DA1_ECK, "2": [0]},
        "transitions": ts,
        "expectedChamberCount": 8,
        "expectedWalls": [wall("c = 2/3"), wall("c = 1/2"), wall("c = -b + 1"), wall("c = 1/5"), wall("c = b/4"),
                          wall("c = 1/6"), wall("b = c")],
        "expectedChambers": [
            {"label": "Sch 2/3<c<=1", "region": region("c > 2/3")},
            {"label": "Sch 1/2<c<=2/3", "region": region("c > 1/2", "c <= 2/3")},
            {"label": "1/5<c<=1/2, c>-b+1", "region": region("c <= 1/2", "c > -b + 1", "c > 1/5")},
            {"label": "1/6<c<=1/2, c<=-b+1", "region": region("c <= -b + 1", "c > 1/6", "c > b/4")},
            {"label": "c<b/4, c<=1/5", "region": region("c < b/4", "c <= 1/5")},
            {"label": "c=b/4", "region": region("c = b/4", "c <= 1/5")},
            {"label": "Sch 1/9<c<=1/6, b!=c", "region": region("c <= 1/6", "c < b")},
            {"label": "b=c<=1/6", "region": region("b = c", "c <= 1/6")},
        ],
        "notes": "the marked line is the Q line h1-e1 together with the fibre of F_1 over its point",
    }


# ---------------------------------------------------------------------------
# E~_2A1 with the marked line through both nodes. Component ids follow the type
# numbers of the degenerate surface; copies get a ".k" suffix.

def e2a1_seed(variant):
    m = Model("E2A1")
    if variant == "A":
        lat1 = plane(7, triples=[[1, 2, 3], [3, 4, 5], [1, 4, 7], [2, 5, 7], [3, 6, 7]])
        eck = {"h-e1-e4": "-e7", "h-e2-e5": "-e7", "h-e3-e6": "-e7"}
    else:
        lat1 = plane(6, triples=[[1, 2, 3], [3, 4, 5]])
        eck = {}
    one = m.add(Comp("1", lat1, [0, 1]))
    for cls in ["h-e1-e4", "h-e1-e5", "h-e2-e4", "h-e2-e5", "h-e3-e6", "2h-e1-e2-e4-e5-e6", "e6"]:
        one.line(cls + eck.get(cls, ""), "c")
    for k, cls in enumerate(["e1", "e2", "h-e4-e6", "h-e5-e6", "e4", "e5", "h-e1-e6", "h-e2-e6"]):
        one.cond(cls, f"g5a{k + 1}")
    one.cond("h-e1-e2-e3", "gD1").cond("h-e3-e4-e5", "gD2").cond("e3", "g13")
    if variant == "A":
        one.cond("e7", "gE")

    fours = []
    for k, cid in enumerate(["4", "4.2"]):
        f = m.add(Comp(cid, quadric(0), [0]))
        f.lines(["h1", "h1", "h2", "h2", "h2", "h2"])
        f.cond("h1", f"g4s{k + 1}").cond("h2", f"g4f{k + 1}")
        fours.append(f)

    lat2 = quadric(5, diag=[1, 2, 3, 4, 5])
    for k, cid in enumerate(["2", "2.2"]):
        t = m.add(Comp(cid, lat2, [0]))
        for i in range(2, 6):
            t.line(f"h1-e{i}", "c").line(f"h2-e{i}", "c")
        t.cond("h1+h2-e1-e2-e3-e4-e5", f"gD{k + 1}")
        t.cond("e1", f"g23{k + 1}")
        for i in range(2, 6):
            t.cond(f"e{i}", f"g5f{4 * k + i - 1}")
        t.cond("h1-e1", f"g24{k + 1}").cond("h2-e1", f"g4s{k + 1}")

    if variant == "A":
        lat3 = plane(5, triples=[[1, 2, 3], [1, 4, 5]])
        th = {}
    else:
        lat3 = plane(6, triples=[[1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]])
        th = {"h-e2-e4": "-e6", "h-e3-e5": "-e6", "h-e1": "-e6"}
    three = m.add(Comp("3'", lat3, [0, 1]))
    three.line("h-e2-e4" + th.get("h-e2-e4", ""), "b")
    for cls in ["h-e2-e5", "h-e3-e4", "h-e3-e5", "h-e1"]:
        three.line(cls + th.get(cls, ""), "c")
    three.cond("h-e1-e2-e3", "g231").cond("h-e1-e4-e5", "g232").cond("e1", "g13")
    three.cond("e2", "g4p1").cond("e3", "g4f1").cond("e4", "g4p2").cond("e5", "g4f2")
    if variant == "B":
        three.cond("e6", "gE")

    for k, cid in enumerate(["4'", "4'.2"]):
        f = m.add(Comp(cid, quadric(0), [0]))
        f.line("h1", "b").line("h1", "c").lines(["h2"] * 4)
        f.cond("h1", f"g24{k + 1}").cond("h2", f"g4p{k + 1}")

    for k in range(8):
        f = m.add(Comp("5a" if k == 0 else f"5a.{k + 1}", quadric(0), [0]))
        f.lines(["h1", "h1", "h2", "h2", "h2"])
        f.cond("h1", f"g5a{k + 1}").cond("h2", f"g5b{k + 1}").cond("h2", f"g5f{k + 1}")
    for k in range(4):
        f = m.add(Comp("5b" if k == 0 else f"5b.{k + 1}", quadric(0), [0]))
        f.lines(["h1", "h1", "h2", "h2"])
        f.cond("h1", f"g5b{2 * k + 1}").cond("h2", f"g5b{2 * k + 2}")

    e = m.add(Comp("E", plane(0)))
    e.lines(["h", "h", "h"] if variant == "A" else [], "c")
    if variant == "B":
        e.line("h", "b").line("h", "c").line("h", "c")
    e.cond("h", "gE")

    # every gluing id occurs on exactly two components
    seen = {}
    for c in m.comps:
        for cd in c.conductors:
            seen.setdefault(cd["gluingId"], []).append(c.id)
    for gid, ids in seen.items():
        if len(ids) != 2:
            raise ValueError(f"gluing {gid} on {ids}")
        m.glue(ids[0], ids[1], gid)
    return m, lat1, lat3


def e2a1_entry(variant):
    m, lat1, lat3 = e2a1_seed(variant)
    q0, q5 = quadric(0), quadric(5, diag=[1, 2, 3, 4, 5])
    p3, p1 = plane(3), plane(1)
    a5 = [("5a" if k == 0 else f"5a.{k + 1}") for k in range(8)]
    b5 = [("5b" if k == 0 else f"5b.{k + 1}") for k in range(4)]
    first = [to_point("E"), blow_down("1", lat1, "e7")] if variant == "A" else [to_point("E"), blow_down("3'", lat3, "e6")]
    ts = [
        transition("0", "1", "c = 2/3" if variant == "A" else "c = -b/2 + 1", "below", first),
        transition("1", "2", "c = 1/2", "below",
                   [to_point(x) for x in b5]
                   + [ruling(x, q0, "h2", absorbing="1") for x in a5]
                   + [ruling("4", q0, "h2", absorbing="2"), ruling("4.2", q0, "h2", absorbing="2.2")]
                   + [blow_down(x, q5, "e2", "e3", "e4", "e5") for x in ("2", "2.2")]
                   + [blow_down("3'", plane(5), "e3", "e5")]),
        transition("2", "3", "c = -b + 1", "below",
                   [ruling("4'", q0, "h2", absorbing="2"), ruling("4'.2", q0, "h2", absorbing="2.2"),
                    blow_down("3'", p3, "e2", "e3")]),
        transition("2", "4", "c = 1/4", "below",
                   [ruling("4'", q0, "h1", absorbing="3'", tag="ContractComponentToCurve"),
                    ruling("4'.2", q0, "h1", absorbing="3'", tag="ContractComponentToCurve"),
                    blow_down("2", quadric(1), "h1-e1"), blow_down("2.2", quadric(1), "h1-e1")]),
        transition("4", "5", "c = b/3", "below", [blow_down("3'", p3, "e2", "e3")]),
        transition("3", "6", "c = -b/3 + 1/3", "below",
                   [ruling("3'", p1, "h-e1", absorbing="1", tag="ContractComponentToCurve"),
                    blow_down("2", quadric(1), "e1"), blow_down("2.2", quadric(1), "e1")]),
        transition("4", "7", "c = 1/6", "below",
                   [ruling("2", p1, "h-e1", absorbing="1", tag="ContractComponentToCurve"),
                    ruling("2.2", p1, "h-e1", absorbing="1", tag="ContractComponentToCurve"),
                    blow_down("3'", p3, "h-e1-e2", "h-e1-e3")]),
        transition("7", "8", "c = -b/3 + 1/3", "below",
                   [ruling("3'", p1, "h-e1", absorbing="1", tag="ContractComponentToCurve")]),
        transition("6", "8", "c = 1/6", "below",
                   [ruling("2", q0, "h1", absorbing="1", tag="ContractComponentToCurve"),
                    ruling("2.2", q0, "h1", absorbing="1", tag="ContractComponentToCurve")]),
        transition("8", "9", "b = c", "below", [nodes("1", plane(6, triples=[[1, 2, 3], [3, 4, 5]]), "h-e1-e2-e3", "h-e3-e4-e5")]),
    ]
    return {
        "typeLabel": "E2A1", "ellChoice": "two-nodes", "variant": variant, "seedModel": m.json(),
        "eckardtOptions": {"1": [0, 1], "3'": [0, 1], "2": [0], "2.2": [0]},
        "transitions": ts,
        "expectedChamberCount": 11,
        "expectedWalls": [wall(w) for w in ["c = 2/3", "c = -b/2 + 1", "c = 1/2", "c = -b + 1", "c = 1/4", "c = b/3",
                                            "c = -b/3 + 1/3", "c = 1/6", "b = c"]],
        "expectedChambers": [
            {"label": "Sch 2/3<c<=1", "region": region("c > 2/3")},
            {"label": "-b/2+1<c<=2/3", "region": region("c <= 2/3", "c > -b/2 + 1")},
            {"label": "Sch 1/2<c<=2/3", "region": region("c > 1/2", "c <= -b/2 + 1")},
            {"label": "1/4<c<=1/2, c>-b+1", "region": region("c <= 1/2", "c > -b + 1", "c > 1/4")},
            {"label": "Sch 1/4<c<=1/2", "region": region("c <= -b + 1", "c > b/3", "c > -b/3 + 1/3")},
            {"label": "b/10+1/10<c<=1/4, 1/6<c<b/3", "region": region("c <= 1/4", "c < b/3", "c > 1/6")},
            {"label": "c=b/3", "region": region("c = b/3", "c > 1/6", "c <= 1/4")},
            {"label": "Sch 1/6<c<=1/4", "region": region("c <= -b/3 + 1/3", "c > 1/6")},
            {"label": "b/10+1/10<c<=1/6, c>-b/3+1/3", "region": region("c <= 1/6", "c > -b/3 + 1/3")},
            {"label": "b/10+1/10<c<=1/6, c<=-b/3+1/3, b!=c", "region": region("c <= 1/6", "c <= -b/3 + 1/3", "c < b")},
            {"label": "Sch 1/9<c<=1/6", "region": region("b = c", "c <= 1/6")},
        ],
        "notes": "variant A: Eckardt point on component 1; variant B: on 3' through the marked line",
    }


# Region-only types: chamber lists for the degenerate types. The marked
# Region-only types: chamber lists read off the appendix figures. The marked
# line's position is the ellChoice; "b != c" chambers are written as c < b.

def region_entry(label, ell, chambers, notes=""):
    return {
        "typeLabel": label, "ellChoice": ell, "variant": "", "seedModel": None,
        "expectedChamberCount": len(chambers),
        "expectedChambers": [{"label": lab, "region": region(*cs)} for lab, *cs in chambers],
        "notes": notes,
    }


TOP = [("Sch 2/3<c<=1", "c > 2/3")]
ECK = [("-b/2+1<c<=2/3", "c <= 2/3", "c > -b/2 + 1"),
       ("Sch 1/2<c<=2/3", "c > 1/2", "c <= -b/2 + 1")]
HALF = [("Sch 1/2<c<=2/3", "c > 1/2", "c <= 2/3")]

E2A1_SMOOTH = TOP + ECK + [
    ("Sch 1/4<c<=1/2", "c > 1/4", "c <= 1/2"),
    ("Sch 1/6<c<=1/4", "c > 1/6", "c <= 1/4"),
    ("Sch 1/9<c<=1/6", "c <= 1/6"),
]

E2A1_ONE_NODE = TOP + HALF + [
    ("1/4<c<=1/2, c>-b+1", "c > 1/4", "c <= 1/2", "c > -b + 1"),
    ("Sch 1/4<c<=1/2", "c > 1/4", "c <= 1/2", "c <= -b + 1"),
    ("1/6<c<=1/4, b/4<c<=-b+1", "c <= 1/4", "c <= -b + 1", "c > 1/6", "c > b/4"),
    ("1/5<c<=1/4, c>-b+1", "c > 1/5", "c <= 1/4", "c > -b + 1"),
    ("b/10+1/10<c<=1/5, c<b/4", "c <= 1/5", "c < b/4"),
    ("c=b/4", "c = b/4", "c <= 1/5"),
    ("Sch 1/9<c<=1/6, b!=c", "c <= 1/6", "c < b"),
    ("b=c<=1/6", "b = c", "c <= 1/6"),
]

E3A1_TWO_NODES = TOP + ECK + [
    ("1/4<c<=1/2, c>-b+1", "c > 1/4", "c <= 1/2", "c > -b + 1"),
    ("Sch 1/4<c<=1/2", "c > 1/4", "c <= -b + 1"),
    ("-b/3+1/3<c<=1/4, c>b/3", "c <= 1/4", "c > -b/3 + 1/3", "c > b/3"),
    ("b/10+1/10<c<=1/4, 1/6<c<b/3", "c <= 1/4", "c > 1/6", "c < b/3"),
    ("c=b/3", "c = b/3", "c > 1/6", "c <= 1/4"),
    ("Sch 1/6<c<=1/4", "c > 1/6", "c <= -b/3 + 1/3"),
    ("b/10+1/10<c<=1/6, c>-b/3+1/3", "c <= 1/6", "c > -b/3 + 1/3"),
    ("b/10+1/10<c<=1/6, c<=-b/3+1/3, b!=c", "c <= 1/6", "c <= -b/3 + 1/3", "c < b"),
    ("b=c<=1/6", "b = c", "c <= 1/6"),
]

DA1_E2A1_TWO_NODES = TOP + HALF + [
    ("1/4<c<=1/2, c>-b+1", "c > 1/4", "c <= 1/2", "c > -b + 1"),
    ("Sch 1/4<c<=1/2", "c <= -b + 1", "c > b/3", "c > -b/3 + 1/3"),
    ("c=1/4", "c = 1/4", "c > -b + 1"),
    ("1/5<c<1/4, c>-b+1", "c > 1/5", "c < 1/4", "c > -b + 1"),
    ("1/6<c<=-b+1, b/4<c<b/3", "c > 1/6", "c <= -b + 1", "c > b/4", "c < b/3"),
    ("c=b/3", "c = b/3", "c > 1/6", "c <= -b + 1"),
    ("c=b/4", "c = b/4", "c <= 1/5"),
    ("b/10+1/10<c<=1/5, c<b/4", "c <= 1/5", "c < b/4"),
    ("Sch 1/6<c<=1/4", "c > 1/6", "c <= -b/3 + 1/3"),
    ("b/10+1/10<c<=1/6, c>-b/3+1/3", "c <= 1/6", "c > -b/3 + 1/3"),
    ("b/10+1/10<c<=1/6, c<=-b/3+1/3, b!=c", "c <= 1/6", "c <= -b/3 + 1/3", "c < b"),
    ("b=c<=1/6", "b = c", "c <= 1/6"),
]

# DA1_E2A1_TWO_NODES with c = 1/4 continued left to (1/4, 1/4).
E3A1_DEGEN_TWO_NODES = TOP + HALF + [
    ("1/4<c<=1/2, c>-b+1", "c > 1/4", "c <= 1/2", "c > -b + 1"),
    ("Sch 1/4<c<=1/2", "c > 1/4", "c <= -b + 1"),
    ("-b/3+1/3<c<=1/4, c>b/3", "c <= 1/4", "c > -b/3 + 1/3", "c > b/3"),
] + DA1_E2A1_TWO_NODES[4:]

D3A2_SMOOTH = TOP + ECK[:1] + [
    ("Sch 1/3<c<=2/3", "c > 1/3", "c <= -b/2 + 1"),
    ("b/10+1/10<c<=1/3, b!=c", "c <= 1/3", "c < b"),
    ("Sch 1/9<c<=1/3", "b = c", "c <= 1/3"),
]

DA1_D3A2_SMOOTH = TOP + ECK + [
    ("Sch 1/3<c<=1/2", "c > 1/3", "c <= 1/2"),
    ("1/6<c<=1/3, b!=c", "c > 1/6", "c <= 1/3", "c < b"),
    ("b/10+1/10<c<=1/6, b!=c", "c <= 1/6", "c < b"),
    ("Sch 1/6<c<=1/3", "b = c", "c > 1/6", "c <= 1/3"),
    ("Sch 1/9<c<=1/6", "b = c", "c <= 1/6"),
]

DA1_D3A2_ONE_NODE = TOP + HALF + [
    ("1/3<c<=1/2, c>-b+1", "c > 1/3", "c <= 1/2", "c > -b + 1"),
    ("Sch 1/3<c<=1/2", "c > 1/3", "c <= 1/2", "c <= -b + 1"),
    ("1/6<c<=1/3, b/4<c<=-b+1, b!=c", "c > 1/6", "c <= 1/3", "c <= -b + 1", "c > b/4", "c < b"),
    ("-b+1<c<=1/3, c>1/5", "c > 1/5", "c <= 1/3", "c > -b + 1"),
    ("b/10+1/10<c<=1/5, c<b/4", "c <= 1/5", "c < b/4"),
    ("c=b/4", "c = b/4", "c <= 1/5"),
    ("b/10+1/10<c<=1/6, b!=c", "c <= 1/6", "c < b"),
    ("Sch 1/6<c<=1/3", "b = c", "c > 1/6", "c <= 1/3"),
    ("Sch 1/9<c<=1/6", "b = c", "c <= 1/6"),
]

DIAG3 = [
    ("Sch 1/4<c<=1/3", "b = c", "c > 1/4", "c <= 1/3"),
    ("Sch 1/6<c<=1/4", "b = c", "c > 1/6", "c <= 1/4"),
    ("Sch 1/9<c<=1/6", "b = c", "c <= 1/6"),
]

E2A1_D3A2_SMOOTH = TOP + ECK + [
    ("Sch 1/3<c<=1/2", "c > 1/3", "c <= 1/2"),
    ("1/4<c<=1/3, b!=c", "c > 1/4", "c <= 1/3", "c < b"),
    ("1/6<c<=1/4, b!=c", "c > 1/6", "c <= 1/4", "c < b"),
    ("b/10+1/10<c<=1/6, b!=c", "c <= 1/6", "c < b"),
] + DIAG3

E2A1_D3A2_ONE_NODE = TOP + HALF + [
    ("1/3<c<=1/2, c>-b+1", "c > 1/3", "c <= 1/2", "c > -b + 1"),
    ("Sch 1/3<c<=1/2", "c > 1/3", "c <= 1/2", "c <= -b + 1"),
    ("1/4<c<=1/3, c<=-b+1, b!=c", "c > 1/4", "c <= 1/3", "c <= -b + 1", "c < b"),
    ("1/4<c<=1/3, c>-b+1", "c > 1/4", "c <= 1/3", "c > -b + 1"),
    ("1/6<c<=1/4, b/4<c<=-b+1, b!=c", "c > 1/6", "c <= 1/4", "c <= -b + 1", "c > b/4", "c < b"),
    ("1/5<c<=1/4, c>-b+1", "c > 1/5", "c <= 1/4", "c > -b + 1"),
    ("b/10+1/10<c<=1/6, b!=c", "c <= 1/6", "c < b"),
    ("b/10+1/10<c<=1/5, c<b/4", "c <= 1/5", "c < b/4"),
    ("c=b/4", "c = b/4", "c <= 1/5"),
] + DIAG3

_D3A2_TOP = TOP + ECK + [
    ("1/3<c<=1/2, c>-b+1", "c > 1/3", "c <= 1/2", "c > -b + 1"),
    ("Sch 1/3<c<=1/2", "c > 1/3", "c <= 1/2", "c <= -b + 1"),
    ("1/4<c<=1/3, c>-b+1", "c > 1/4", "c <= 1/3", "c > -b + 1"),
]
_D3A2_LOW = [
    ("1/6<c<=1/4, b!=c", "c > 1/6", "c <= -b/3 + 1/3", "c < b"),
    ("b/10+1/10<c<=1/4, 1/6<c<b/3", "c <= 1/4", "c > 1/6", "c < b/3"),
    ("c=b/3", "c = b/3", "c > 1/6", "c <= 1/4"),
    ("b/10+1/10<c<=1/6, c<=-b/3+1/3, b!=c", "c <= 1/6", "c <= -b/3 + 1/3", "c < b"),
    ("b/10+1/10<c<=1/6, c>-b/3+1/3", "c <= 1/6", "c > -b/3 + 1/3"),
]

E2A1_D3A2_TWO_NODES = _D3A2_TOP + [
    ("-b/3+1/3<c<=1/3, b/3<c<=-b+1, b!=c", "c > -b/3 + 1/3", "c <= 1/3", "c > b/3", "c <= -b + 1", "c < b"),
] + _D3A2_LOW + DIAG3

E3A1_D3A2_TWO_NODES = _D3A2_TOP + [
    ("1/4<c<=1/3, c<=-b+1, b!=c", "c > 1/4", "c <= 1/3", "c <= -b + 1", "c < b"),
    ("-b/3+1/3<c<=1/4, c>b/3", "c > -b/3 + 1/3", "c <= 1/4", "c > b/3"),
] + _D3A2_LOW + DIAG3

# Degenerations with the marked line on the Bl5 component; no Eckardt wall.
E3A1_D3A2_DEGEN_TWO_NODES = TOP + HALF + [
    ("1/3<c<=1/2, c>-b+1", "c > 1/3", "c <= 1/2", "c > -b + 1"),
    ("Sch 1/3<c<=1/2", "c > 1/3", "c <= 1/2", "c <= -b + 1"),
    ("1/4<c<=1/3, c>-b+1", "c > 1/4", "c <= 1/3", "c > -b + 1"),
    ("1/4<c<=1/3, c<=-b+1, b!=c", "c > 1/4", "c <= 1/3", "c <= -b + 1", "c < b"),
    ("-b/3+1/3<c<=1/4, c>b/3", "c > -b/3 + 1/3", "c <= 1/4", "c > b/3"),
    ("1/6<c<=1/4, b!=c", "c > 1/6", "c <= -b/3 + 1/3", "c < b"),
    ("c=1/4", "c = 1/4", "c > -b + 1"),
    ("1/5<c<1/4, c>-b+1", "c > 1/5", "c < 1/4", "c > -b + 1"),
    ("1/6<c<=-b+1, b/4<c<b/3", "c > 1/6", "c <= -b + 1", "c > b/4", "c < b/3"),
    ("c=b/3", "c = b/3", "c > 1/6", "c <= 1/4"),
    ("c=b/4", "c = b/4", "c <= 1/5"),
    ("b/10+1/10<c<=1/5, c<b/4", "c <= 1/5", "c < b/4"),
    ("b/10+1/10<c<=1/6, c>-b/3+1/3", "c <= 1/6", "c > -b/3 + 1/3"),
    ("b/10+1/10<c<=1/6, c<=-b/3+1/3, b!=c", "c <= 1/6", "c <= -b/3 + 1/3", "c < b"),
] + DIAG3


def region_entries():
    degen = "degeneration type, chambers only"
    out = [
        region_entry("E2A1", "ell-smooth", E2A1_SMOOTH),
        region_entry("E2A1", "ell-one-node", E2A1_ONE_NODE),
        region_entry("DA1_E2A1", "two-nodes", DA1_E2A1_TWO_NODES, degen),
        region_entry("E3A1", "ell-smooth", E2A1_SMOOTH),
        region_entry("E3A1", "ell-one-node", E2A1_ONE_NODE),
        region_entry("E3A1", "two-nodes", E3A1_TWO_NODES),
    ]
    for t in ("DA1_E3A1", "E2A1_E3A1", "DA1_E2A1_E3A1"):
        out.append(region_entry(t, "two-nodes", E3A1_DEGEN_TWO_NODES, degen))
    out += [
        region_entry("E4A1", "ell-smooth", E2A1_SMOOTH),
        region_entry("E4A1", "two-nodes", E3A1_TWO_NODES),
        region_entry("D3A2", "ell-smooth", D3A2_SMOOTH),
        region_entry("DA1_D3A2", "ell-smooth", DA1_D3A2_SMOOTH),
        region_entry("DA1_D3A2", "ell-one-node", DA1_D3A2_ONE_NODE),
        region_entry("E2A1_D3A2", "ell-smooth", E2A1_D3A2_SMOOTH),
        region_entry("E2A1_D3A2", "ell-one-node", E2A1_D3A2_ONE_NODE),
        region_entry("E2A1_D3A2", "two-nodes", E2A1_D3A2_TWO_NODES),
        region_entry("E3A1_D3A2", "ell-smooth", E2A1_D3A2_SMOOTH),
        region_entry("E3A1_D3A2", "ell-one-node", E2A1_D3A2_ONE_NODE),
        region_entry("E3A1_D3A2", "two-nodes", E3A1_D3A2_TWO_NODES),
    ]
    for t in ("DA1_E3A1_D3A2", "E2A1_E3A1_D3A2", "DA1_E2A1_E3A1_D3A2"):
        out.append(region_entry(t, "two-nodes-bl5", E3A1_D3A2_DEGEN_TWO_NODES, degen))
    return out


# ---------------------------------------------------------------------------
# Global table. Grid positions follow the morphism diagram (row-column).

GLOBAL = [
    ("1-7", "Y_{(2/3,1]}", ["c > 2/3"]),
    ("2-6", "Y^>_{(1/2,2/3]}", ["c > 1/2", "c <= 2/3", "c > -b/2 + 1"]),
    ("1-6", "Y^<=_{(1/2,2/3]}", ["c > 1/2", "c <= 2/3", "c <= -b/2 + 1"]),
    ("2-5", "Y^>_{(1/3,1/2]}", ["c > 1/3", "c <= 1/2", "c > -b + 1"]),
    ("1-5", "Y^<=_{(1/3,1/2]}", ["c > 1/3", "c <= 1/2", "c <= -b + 1"]),
    ("3-4", "Y^>_{(1/4,1/3]}", ["c > 1/4", "c <= 1/3", "c > -b + 1"]),
    ("2-4", "Y^<=_{(1/4,1/3]}", ["c > 1/4", "c <= 1/3", "c <= -b + 1", "c < b"]),
    ("1-4", "Y^=_{(1/4,1/3]}", ["b = c", "c > 1/4", "c <= 1/3"]),
    ("4-3", "Y_{c=1/4}", ["c = 1/4", "b > 3/4"]),
    ("5-3", "Y^>_{(1/5,1/4)}", ["c > 1/5", "c < 1/4", "c > -b + 1"]),
    ("7-2", "Y_{(b/10+1/10,1/5]}", ["c <= 1/5", "c < b/4"]),
    ("6-2", "Y_{c=b/4}", ["c = b/4", "b > 2/3", "b <= 4/5"]),
    ("5-2", "Y_{(b/4,b/3)}", ["c > b/4", "c < b/3", "c > 1/6", "c <= -b + 1"]),
    ("4-2", "Y_{c=b/3}", ["c = b/3", "b > 1/2", "b <= 3/4"]),
    ("3-2", "Y_{(-b/3+1/3,1/4]}", ["c > -b/3 + 1/3", "c <= 1/4", "c > b/3"]),
    ("2-2", "Y_{(1/6,-b/3+1/3]}", ["c > 1/6", "c <= -b/3 + 1/3", "c < b"]),
    ("1-2", "Y^=_{(1/6,1/4]}", ["b = c", "c > 1/6", "c <= 1/4"]),
    ("3-1", "Y^>_{(b/10+1/10,1/6]}", ["c <= 1/6", "c > -b/3 + 1/3"]),
    ("2-1", "Y^<=_{(b/10+1/10,1/6]}", ["c <= 1/6", "c <= -b/3 + 1/3", "c < b"]),
    ("1-1", "Y^=_{(1/9,1/6]}", ["b = c", "c <= 1/6"]),
]

ARROWS = """1-2>1-1 1-4x1-2 1-5>1-4 1-5>2-4 1-6>1-5 1-6>2-5 1-7>1-6 1-7>2-6 2-1>1-1 2-2>1-2 2-2>2-1
2-4>1-4 2-4x3-2 2-5>1-5 2-5>2-4 2-5>3-4 2-6>1-6 2-6>2-5 3-1x2-1 3-2x2-1 3-2x2-2 3-4>2-4 3-4x4-2
3-4x4-3 4-2>3-2 4-3>5-3 5-2>3-1 5-2>4-2 5-3>5-2 5-3>6-2 5-3>7-2 6-2>5-2 7-2>6-2"""


def global_section():
    name = {pos: lab for pos, lab, _ in GLOBAL}
    morphisms = []
    for a in ARROWS.split():
        iso = ">" in a
        frm, to = re.split("[>x]", a)
        morphisms.append({"from": name[frm], "to": name[to], "iso": iso})
    return {
        "expectedChamberCount": 20,
        "chambers": [{"label": lab, "region": region(*cs)} for _, lab, cs in GLOBAL],
        "moduliChangingWalls": [wall("c = 1/4"), wall("c = -b/3 + 1/3")],
        "morphisms": morphisms,
    }


def main():
    types = [smooth_entry("A"), smooth_entry("B"), da1_smooth_entry("A"), da1_smooth_entry("B"), da1_node_entry(), e2a1_entry("A"), e2a1_entry("B")]
    types += region_entries()
    cat = {"schemaVersion": 1, "types": types, "global": global_section()}
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "catalog.json"
    out.write_text(json.dumps(cat, indent=1) + "\n")


if __name__ == "__main__":
    main()
