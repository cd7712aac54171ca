"""Mapping classes acting on curve classes: Dehn twists and crosscap slides.

A twist about a 2-sided core is performed by diagram surgery: the target is
put in minimal position with the core, and at every crossing a full parallel
copy of the core is spliced in.  Transverse positions of the spliced strands
follow the spiral picture in the core's annulus neighbourhood, so several
crossings cable correctly.  Because the core may run through crosscap edges,
"left of travel" flips along the way; offsets are therefore expressed on a
consistent side of the annulus via the flip parity along the core.

Twist direction: +1 follows the stored cyclic orientation of the core's
diagram.  Nonorientability rules out a global handedness, so the stored
orientation of each core is the per-curve convention; the package-wide
``TWIST_SIGN`` flag in :mod:`crosscap.config` flips every twist at once.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from . import config
from .curves import (
    CurveClass,
    Surface,
    TRIVIAL,
    classify_candidate,
    isotopic,
)
from .diagram import (
    Crossing,
    Diagram,
    _FaceArrangement,
    _cross,
    convex_point,
    crossing_count,
    overlay,
    reduce_to_minimal_position,
    reparametrize,
    self_crossings,
)


def _crossing_records(reduced):
    """Core-target crossings of a reduced two-curve overlay.

    Each record holds the core and target chord indices, exact positions
    along both chords, and the local side of the core from which the target
    chord arrives.
    """
    out = []
    chords = reduced.face_chords()
    for f in sorted(reduced.tri.faces):
        arr = _FaceArrangement(reduced, f, chords[f])
        for nid, i, j in arr.crossing_pairs:
            li = arr.chords[i][0]
            lj = arr.chords[j][0]
            if li[0] == lj[0]:
                raise ValueError("overlay curves are not individually embedded")
            ci, cj = (i, j) if li[0] == 0 else (j, i)
            _, ca, cb = arr.chords[ci]
            _, ta, tb = arr.chords[cj]
            s = _cross(arr.pos[ca], arr.pos[cb], arr.pos[ta])
            if s == 0:
                raise RuntimeError("degenerate crossing configuration")
            out.append({
                "core_chord": arr.chords[ci][0][1],
                "target_chord": arr.chords[cj][0][1],
                "t_target": arr.chord_t(cj, nid),
                "t_core": arr.chord_t(ci, nid),
                "local_side": 1 if s > 0 else -1,
            })
    return out


def _left_param_direction(reduced, m):
    """Reference-frame parameter direction left of the core at crossing m,
    as seen while travelling the chord arriving there."""
    core = reduced.curves[0]
    n = len(core)
    c_in, face = core[(m - 1) % n]
    c_out = core[m][0]
    pa = convex_point(reduced.port_coord(face, c_in))
    pb = convex_point(reduced.port_coord(face, c_out))
    d = reduced.dart_in_face(c_out.edge, face)
    slot = reduced.tri.dart_pos[d]
    local = reduced.local_param(c_out.edge, face, c_out.param)
    ref_sign = 1
    if d != reduced.tri.edges[c_out.edge][0] and \
       not reduced.tri.flip.get(c_out.edge, False):
        ref_sign = -1
    delta = Fraction(1, 10 ** 9)
    q = convex_point(slot + local + delta)
    s = _cross(pa, pb, q)
    if s == 0:
        raise RuntimeError("could not orient the core at a crossing")
    return (1 if s > 0 else -1) * ref_sign


def _flip_parity(reduced):
    """parity[m]: +1/-1 telling whether local left at segment m agrees with
    global side A (the left of travel on the segment of chord 0)."""
    core = reduced.curves[0]
    tri = reduced.tri
    n = len(core)
    parity = [1] * n
    p = 1
    for m in range(1, n):
        if tri.flip.get(core[m][0].edge, False):
            p = -p
        parity[m] = p
    # closing the loop must restore the side for a 2-sided core
    closing = p * (-1 if tri.flip.get(core[0][0].edge, False) else 1)
    if closing != 1:
        raise ValueError("core is not 2-sided")
    return parity


def twist(core: CurveClass, target: CurveClass, power: int = 1) -> CurveClass:
    """Image of ``target`` under the ``power``-th Dehn twist about ``core``.

    Direction +1 pushes strands along the stored orientation of the core's
    diagram; the global ``config.TWIST_SIGN`` reverses all twists at once.
    """
    if not core.is_two_sided:
        raise ValueError("Dehn twists require a 2-sided core")
    if power == 0:
        return target
    sign = power * config.TWIST_SIGN * core.orientation
    direction = 1 if sign > 0 else -1
    result = target
    for _ in range(abs(power)):
        result = _twist_once(core, result, direction)
    return result


def _twist_once(core, target, direction, max_tries=6):
    surface = core.surface
    if isotopic(core, target):
        return target
    reduced = reduce_to_minimal_position(overlay(core.diagram, target.diagram))
    if crossing_count(reduced) == 0:
        return target
    last_error = None
    for attempt in range(max_tries):
        base = reduced if attempt == 0 else reparametrize(reduced, attempt)
        diag = _splice(base, direction, attempt)
        if self_crossings(diag) == 0:
            cand = classify_candidate(surface, diag)
            if cand is TRIVIAL:
                raise RuntimeError("twist produced an inessential curve")
            return surface.intern(cand)
        last_error = "spliced diagram is not embedded"
    raise RuntimeError(last_error or "twist splice failed")


def _splice(reduced, direction, attempt):
    core_steps = reduced.curves[0]
    targ_steps = reduced.curves[1]
    n = len(core_steps)
    records = _crossing_records(reduced)
    k = len(records)
    lefts = {m: _left_param_direction(reduced, m) for m in range(n)}
    parity = _flip_parity(reduced)

    by_target_chord = {}
    for j, rec in enumerate(records):
        rec["theta"] = Fraction(rec["core_chord"]) + rec["t_core"]
        # entry side on the consistent side A of the core's annulus
        rec["sigma"] = rec["local_side"] * parity[rec["core_chord"]]
        by_target_chord.setdefault(rec["target_chord"], []).append(rec)
    for lst in by_target_chord.values():
        lst.sort(key=lambda r: r["t_target"])

    by_edge = reduced.edge_crossings()
    room = {}
    for m in range(n):
        c = core_steps[m][0]
        params = [x.param for x in by_edge[c.edge]]
        i = params.index(c.param)
        lo = params[i - 1] if i > 0 else Fraction(0)
        hi = params[i + 1] if i + 1 < len(params) else Fraction(1)
        room[m] = ((c.param - lo) * Fraction(9, 20),
                   (hi - c.param) * Fraction(9, 20))

    def visit_sequence(s, walk):
        if walk > 0:
            return [(s + step) % n for step in range(1, n + 1)]
        return [(s - step + 1) % n for step in range(1, n + 1)]

    def tau(rec, m, walk):
        if walk > 0:
            num = (Fraction(m) - rec["theta"]) % n
        else:
            num = (rec["theta"] - Fraction(m)) % n
        return num / n

    new_curve = []
    for t_idx, (tc, tf) in enumerate(targ_steps):
        new_curve.append((Crossing(tc.edge, tc.param), tf))
        for rec in by_target_chord.get(t_idx, []):
            s = rec["core_chord"]
            # the image of a strand winds with the twist direction as seen
            # from the side it enters: strands entering from the far side
            # traverse the detour against the core's orientation
            walk = direction * rec["sigma"]
            for m in visit_sequence(s, walk):
                cm, face_m = core_steps[m]
                face_after = face_m if walk > 0 \
                    else core_steps[(m - 1) % n][1]
                offset = rec["sigma"] * (1 - 2 * tau(rec, m, walk))
                side_dir = lefts[m] * parity[(m - 1) % n]
                below, above = room[m]
                if side_dir > 0:
                    delta = offset * above if offset >= 0 else offset * below
                else:
                    delta = -offset * below if offset >= 0 else -offset * above
                new_curve.append((Crossing(cm.edge, cm.param + delta),
                                  face_after))
    return Diagram(reduced.tri, [new_curve])


# ---------------------------------------------------------------------------
# crosscap slides
# ---------------------------------------------------------------------------

def _slide_reflection(surface, mu, alpha):
    """A polygon reflection that, composed with the twist about ``alpha``,
    slides ``mu`` along ``alpha``: the composite must fix alpha, fix mu, and
    fix every core disjoint from the supporting Klein bottle."""
    from .curves import core_curve, geometric_intersection
    from .symmetry import polygon_reflection
    from .cells import polygon_edge_word
    word = polygon_edge_word(surface.sig)
    m = len(word)
    spectators = []
    for i in range(1, surface.sig.genus + 1):
        c = core_curve(surface, i)
        if isotopic(c, mu):
            continue
        if geometric_intersection(c, mu) == 0 and \
           geometric_intersection(c, alpha) == 0:
            spectators.append(c)
    for axis in range(m):
        if any(word[k][0] != word[(2 * axis - k) % m][0] for k in range(m)):
            continue
        try:
            refl = polygon_reflection(surface, axis)
        except ValueError:
            continue
        try:
            if not isotopic(refl.apply(alpha), alpha):
                continue
            composite_ok = isotopic(refl.apply(twist(alpha, mu, 1)), mu) and \
                all(isotopic(refl.apply(twist(alpha, c, 1)), c)
                    for c in spectators)
            if composite_ok:
                return refl
        except RuntimeError:
            continue
    return None


def crosscap_slide(mu: CurveClass, alpha: CurveClass, target: CurveClass,
                   power: int = 1) -> CurveClass:
    """Image of ``target`` under the crosscap slide of ``mu`` along ``alpha``.

    Requires a 1-sided ``mu`` and a 2-sided ``alpha`` meeting once.  The
    slide is realised as (reflection fixing the pair) composed with a twist
    about ``alpha``; the reflection must exist in the polygon model, which
    covers the slides used by the generating sets shipped here.
    """
    from .curves import geometric_intersection
    if mu.is_two_sided:
        raise ValueError("the slid curve mu must be 1-sided")
    if not alpha.is_two_sided:
        raise ValueError("the guide curve alpha must be 2-sided")
    if geometric_intersection(mu, alpha) != 1:
        raise ValueError("a crosscap slide needs i(mu, alpha) = 1")
    surface = mu.surface
    key = (id(mu), id(alpha))
    cache = getattr(surface, "_slide_refl", None)
    if cache is None:
        cache = surface._slide_refl = {}
    if key not in cache:
        refl = _slide_reflection(surface, mu, alpha)
        if refl is None:
            raise ValueError(
                "no model reflection supports this slide; only polygon-"
                "symmetric (mu, alpha) pairs are realised")
        cache[key] = refl
    refl = cache[key]
    result = target
    eps = config.TWIST_SIGN
    for _ in range(abs(power)):
        if power > 0:
            result = refl.apply(twist(alpha, result, eps))
        else:
            result = twist(alpha, refl.apply(result), -eps)
    return result


# ---------------------------------------------------------------------------
# mapping classes as generator words
# ---------------------------------------------------------------------------

class Generator:
    """A twist or slide generator with its defining curve data."""

    def __init__(self, kind, curves, power=1, name=None):
        if kind not in ("twist", "slide"):
            raise ValueError("generator kind must be 'twist' or 'slide'")
        self.kind = kind
        self.curves = tuple(curves)
        self.power = power
        self.name = name or kind

    def inverse(self):
        return Generator(self.kind, self.curves, -self.power, self.name)

    def apply(self, c: CurveClass) -> CurveClass:
        surface = c.surface
        cache = getattr(surface, "_gen_cache", None)
        if cache is None:
            cache = surface._gen_cache = {}
        key = (self.kind, tuple(id(x) for x in self.curves), self.power, id(c))
        cacheable = c._interned and all(x._interned for x in self.curves)
        if cacheable and key in cache:
            return cache[key]
        if self.kind == "twist":
            out = twist(self.curves[0], c, self.power)
        else:
            mu, alpha = self.curves
            out = crosscap_slide(mu, alpha, c, self.power)
        if cacheable:
            cache[key] = out
        return out

    def json_dict(self):
        names = [x.name or "?" for x in self.curves]
        if self.kind == "twist":
            return {"twist": names[0], "dir": self.power}
        return {"slide": names, "dir": self.power}

    def __repr__(self):
        sup = "" if self.power == 1 else f"^{self.power}"
        return f"{self.name}{sup}"


class MappingClass:
    """A word in twist and slide generators, acting on curve classes."""

    def __init__(self, word=()):
        self.word = tuple(word)

    def __mul__(self, other):
        return MappingClass(self.word + other.word)

    def inverse(self):
        return MappingClass(tuple(g.inverse() for g in reversed(self.word)))

    def apply(self, c: CurveClass) -> CurveClass:
        for g in self.word:
            c = g.apply(c)
        return c

    def json_list(self):
        return [g.json_dict() for g in self.word]

    def __repr__(self):
        return "id" if not self.word else "*".join(repr(g) for g in self.word)


def apply_word(word, c):
    return MappingClass(word).apply(c)
