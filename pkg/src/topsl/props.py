"""Decision procedures for the named separation and order properties of a
topologized semilattice, assembled into one property vector per instance."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, fields

from . import topo, tsl, weak
from .core import (
    NotASemilatticeError,
    bits,
    bound_extremum,
    chain_and_directed,
    cone,
    full_mask,
    is_linear,
    is_shift_homomorphic,
    natural_order,
    subsets,
)


@dataclass(frozen=True)
class UVWProfile:
    is_u: bool
    is_w: bool
    is_v: bool


def uvw_profile(x_instance: tsl.TopologizedSemigroup) -> UVWProfile:
    alg, top = x_instance.algebra, x_instance.topology
    if not alg.is_semilattice:
        raise NotASemilatticeError("U/W/V profile needs a semilattice")
    poset = natural_order(alg)
    n = alg.n
    int_up = [topo.interior(top, poset.up[v]) for v in range(n)]

    def u_ok(v_set: int, x: int) -> bool:
        return any(int_up[v] >> x & 1 for v in bits(v_set))

    def w_ok(v_set: int, x: int) -> bool:
        elems = list(bits(v_set))
        for r in range(1, len(elems) + 1):
            for f in itertools.combinations(elems, r):
                up_f = cone(poset, sum(1 << e for e in f), "up")
                if topo.interior(top, up_f) >> x & 1:
                    return True
        return False

    is_u = all(u_ok(v_set, x) for v_set in top.opens for x in bits(v_set))
    is_w = all(w_ok(v_set, x) for v_set in top.opens for x in bits(v_set))
    is_v = all(
        any(not poset.leq(v, y) and int_up[v] >> x & 1 for v in range(n))
        for x in range(n)
        for y in range(n)
        if not poset.leq(x, y)
    )
    return UVWProfile(is_u, is_w, is_v)


@dataclass(frozen=True)
class SeparationSuite:
    i_separated: bool
    law_tau_separated: bool
    zar_tau_separated: bool
    law_hausdorff: bool
    zar_hausdorff: bool
    weak_hausdorff: bool


def i_separated(x_instance: tsl.TopologizedSemigroup) -> bool:
    """Continuous homomorphisms into the min-interval separate all points.

    Two points get different values under some homomorphism exactly when
    some multiplicative cut (a level set of such a homomorphism) contains
    one of them but not the other.
    """
    cuts = weak.multiplicative_cuts(x_instance)
    return all(
        any((s >> x & 1) != (s >> y & 1) for s in cuts)
        for x, y in itertools.combinations(range(x_instance.n), 2)
    )


def _two_topology_separated(
    fine: topo.FiniteTopology, coarse: topo.FiniteTopology
) -> bool:
    """Every ordered pair x != y has disjoint neighborhoods, x in a
    coarse-topology open and y in a fine-topology open."""
    n = fine.n
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            if not any(
                a >> x & 1 and b >> y & 1 and not a & b
                for a in coarse.opens
                for b in fine.opens
            ):
                return False
    return True


def separation_suite(x_instance: tsl.TopologizedSemigroup) -> SeparationSuite:
    law = weak.law_topology(x_instance)
    zar = weak.zar_topology(x_instance)
    wk = weak.weak_topology(x_instance)
    tau = x_instance.topology
    return SeparationSuite(
        i_separated=i_separated(x_instance),
        law_tau_separated=_two_topology_separated(tau, law),
        zar_tau_separated=_two_topology_separated(tau, zar),
        law_hausdorff=topo.separation_profile(law).t2,
        zar_hausdorff=topo.separation_profile(zar).t2,
        weak_hausdorff=topo.separation_profile(wk).t2,
    )


def law_hausdorff_witness(
    x_instance: tsl.TopologizedSemigroup, x: int, y: int
) -> tuple[int, int] | None:
    """Disjoint open subsemigroups around x and y, or None.

    Returns the lexicographically smallest witness pair (by bitmask).
    """
    if x == y:
        raise ValueError("witness needs two distinct points")
    alg, top = x_instance.algebra, x_instance.topology
    open_subs = [u for u in top.opens if tsl._is_subsemigroup(alg, u)]
    for a in open_subs:
        if not a >> x & 1:
            continue
        for b in open_subs:
            if b >> y & 1 and not a & b:
                return (a, b)
    return None


def zar_hausdorff_witness(
    x_instance: tsl.TopologizedSemigroup, x: int, y: int
) -> tuple[int, ...] | None:
    """A finite cover of the carrier by closed subsemigroups no member of
    which contains both x and y, or None.  Smallest cover first, ties broken
    lexicographically by bitmask."""
    if x == y:
        raise ValueError("witness needs two distinct points")
    full = full_mask(x_instance.n)
    closed_subs = [
        f
        for f in tsl.enumerate_subsemigroups(x_instance, closed_only=True)
        if f and not (f >> x & 1 and f >> y & 1)
    ]
    for r in range(1, len(closed_subs) + 1):
        for combo in itertools.combinations(closed_subs, r):
            cover = 0
            for f in combo:
                cover |= f
            if cover == full:
                return combo
    return None


def is_meet_continuous(sl) -> bool:
    """Whether a * sup(D) is the supremum of a*D for every up-directed D.

    On a finite semilattice every up-directed set contains its maximum, so
    this is always true; the literal scan is kept.
    """
    poset = natural_order(sl)
    n = sl.n
    for d in subsets(n):
        if not d or not chain_and_directed(poset, d).is_up_directed:
            continue
        s = bound_extremum(poset, d, "sup")
        if s is None:
            continue
        for a in range(n):
            ad = 0
            for x in bits(d):
                ad |= 1 << sl.table[a][x]
            if bound_extremum(poset, ad, "sup") != sl.table[a][s]:
                return False
    return True


def zar_compact_centered(x_instance: tsl.TopologizedSemigroup) -> bool:
    """Every centered family of closed subsemigroups has nonempty intersection.

    Over a finite carrier a family's total intersection is achieved by some
    subfamily of at most n + 1 members, so those suffice.
    """
    n = x_instance.n
    family = [
        f for f in tsl.enumerate_subsemigroups(x_instance, closed_only=True) if f
    ]
    if not family:
        return True
    cap = min(len(family), n + 1)
    for r in range(1, cap + 1):
        for combo in itertools.combinations(family, r):
            report = topo.centered_family_report(n, combo)
            if report.is_centered and not report.total_intersection:
                return False
    return True


@dataclass(frozen=True)
class PropertyVector:
    is_u: bool
    is_w: bool
    is_v: bool
    i_separated: bool
    law_tau_separated: bool
    zar_tau_separated: bool
    law_hausdorff: bool
    zar_hausdorff: bool
    weak_hausdorff: bool
    weak_circ: bool
    weak_bullet: bool
    i_weak: bool
    meet_continuous: bool
    linear: bool
    shift_homomorphic: bool
    zar_compact_centered: bool
    t0: bool
    t1: bool
    t2: bool
    discrete: bool
    topological: bool
    semitopological: bool
    subtopological: bool
    updown_closed: bool
    complete: bool
    chain_compact: bool
    down_chain_compact: bool

    def as_dict(self) -> dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


PROPERTY_NAMES = tuple(f.name for f in fields(PropertyVector))


def property_vector(
    x_instance: tsl.TopologizedSemigroup,
    comparison: weak.ComparisonReport | None = None,
) -> PropertyVector:
    """Decide every named property of a topologized semilattice instance."""
    alg = x_instance.algebra
    if not alg.is_semilattice:
        raise NotASemilatticeError("property vector needs a semilattice")
    if comparison is None:
        comparison = weak.topology_comparison(x_instance)
    uvw = uvw_profile(x_instance)
    sep = topo.separation_profile(x_instance.topology)
    cont = tsl.continuity_profile(x_instance)
    order = tsl.order_profile(x_instance)
    tau = x_instance.topology
    law, zar, wk = (
        comparison.bundle.law,
        comparison.bundle.zar,
        comparison.bundle.weak,
    )
    return PropertyVector(
        is_u=uvw.is_u,
        is_w=uvw.is_w,
        is_v=uvw.is_v,
        i_separated=i_separated(x_instance),
        law_tau_separated=_two_topology_separated(tau, law),
        zar_tau_separated=_two_topology_separated(tau, zar),
        law_hausdorff=topo.separation_profile(law).t2,
        zar_hausdorff=topo.separation_profile(zar).t2,
        weak_hausdorff=topo.separation_profile(wk).t2,
        weak_circ=comparison.weak_circ,
        weak_bullet=comparison.weak_bullet,
        i_weak=comparison.i_weak,
        meet_continuous=is_meet_continuous(alg),
        linear=is_linear(alg),
        shift_homomorphic=is_shift_homomorphic(alg),
        zar_compact_centered=zar_compact_centered(x_instance),
        t0=sep.t0,
        t1=sep.t1,
        t2=sep.t2,
        discrete=sep.discrete,
        topological=cont.topological,
        semitopological=cont.semitopological,
        subtopological=cont.subtopological,
        updown_closed=order.updown_closed,
        complete=order.complete,
        chain_compact=order.chain_compact,
        down_chain_compact=order.down_chain_compact,
    )
