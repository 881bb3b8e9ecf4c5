"""Domination polynomials by brute force, recurrences, and closed forms.

The same polynomial is reachable three independent ways — exhaustive subset
enumeration, deletion/contraction recurrences, and family closed forms — and
the test suite insists the paths coincide.  Conventions the recurrences
force: the empty graph has polynomial 1 (the empty set dominates it), and a
graph of n isolated vertices has polynomial x^n.
"""

from __future__ import annotations

import numpy as np

from .graphs import (
    FamilySpec,
    Graph,
    bitset_members,
    build_family,
    contract,
    corona,
    delete_closed_neighborhood,
    delete_vertex,
    odot,
)
from .polynomials import ONE, X, IntPolynomial

BRUTE_FORCE_BUDGET_BITS = 26

_CHUNK_BITS = 13  # low-half table size for the subset sweep


class EnumerationBudgetError(ValueError):
    """Instance too large for subset enumeration; use a closed form or
    recurrence path instead."""


def _check_budget(g: Graph, budget_bits: int) -> None:
    if g.n > budget_bits:
        raise EnumerationBudgetError(
            f"{g.n} vertices needs 2^{g.n} subsets, over the 2^{budget_bits} "
            f"budget; use family_poly or a recurrence instead")


def _cover_table(masks: list[int]) -> list[int]:
    """table[s] = union of masks[v] over the bits v of s."""
    table = [0] * (1 << len(masks))
    for s in range(1, len(table)):
        low = s & -s
        table[s] = table[s ^ low] | masks[low.bit_length() - 1]
    return table


def _count_covering_by_size(masks: list[int], full: int) -> list[int]:
    """counts[i] = number of i-element subsets of masks whose union is full.

    Splits the subset index into a low and a high half so each sweep step is
    one vectorized OR + compare over the low table.
    """
    k = len(masks)
    if k == 0:
        return [1] if full == 0 else [0]
    lo = min(k, _CHUNK_BITS)
    low_table = np.array(_cover_table(masks[:lo]), dtype=np.int64)
    low_pop = np.array([s.bit_count() for s in range(1 << lo)], dtype=np.int64)
    high_table = _cover_table(masks[lo:])
    counts = [0] * (k + 1)
    for t, high_cover in enumerate(high_table):
        ok = (low_table | high_cover) == full
        if ok.any():
            t_pop = t.bit_count()
            for i, c in enumerate(np.bincount(low_pop[ok], minlength=lo + 1)):
                if c:
                    counts[i + t_pop] += int(c)
    return counts


def brute_force_poly(g: Graph, budget_bits: int = BRUTE_FORCE_BUDGET_BITS) -> IntPolynomial:
    """Exact domination polynomial by enumerating all 2^n vertex subsets."""
    _check_budget(g, budget_bits)
    if g.n == 0:
        return ONE
    return IntPolynomial(_count_covering_by_size(list(g.closed), g.full_mask))


def restricted_count(g: Graph, u: int,
                     budget_bits: int = BRUTE_FORCE_BUDGET_BITS) -> IntPolynomial:
    """Polynomial counting dominating sets of g - u that avoid all of N(u).

    Neighborhoods are read in g itself, so the allowed vertices are exactly
    those outside N[u]; domination is tested in the deleted graph.
    """
    g._check_vertex(u)
    _check_budget(g, budget_bits)
    h = delete_vertex(g, u)
    allowed = [v - (v > u) for v in bitset_members(g.full_mask & ~g.closed[u])]
    masks = [h.closed[v] for v in allowed]
    return IntPolynomial(_count_covering_by_size(masks, h.full_mask))


# -- product and join formulas ------------------------------------------------

def union_poly(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Domination polynomial of a disjoint union: the product."""
    return p * q


def join_poly(p: IntPolynomial, n1: int, q: IntPolynomial, n2: int) -> IntPolynomial:
    """Domination polynomial of the join of graphs of orders n1 and n2
    with polynomials p and q."""
    if n1 < 1 or n2 < 1:
        raise ValueError("join operands must be nonempty")
    xp1 = (ONE + X) ** n1 - ONE
    xp2 = (ONE + X) ** n2 - ONE
    return xp1 * xp2 + p + q


def corona_poly(q: IntPolynomial, m: int, n: int) -> IntPolynomial:
    """Domination polynomial of G∘H: (x(1+x)^m + D(H,x))^n.

    Only the orders matter: m = |V(H)| (must be >= 1), n = |V(G)|.
    """
    if m < 1:
        raise ValueError("corona requires a nonempty second operand (m >= 1)")
    if n < 1:
        raise ValueError("corona requires a nonempty first operand (n >= 1)")
    return (X * (ONE + X) ** m + q) ** n


# -- recurrences ----------------------------------------------------------------

def recurrence_poly_vertex(g: Graph, u: int,
                           budget_bits: int = BRUTE_FORCE_BUDGET_BITS) -> IntPolynomial:
    """Vertex-contraction recurrence:

        D(G) = x·D(G/u) + D(G-u) + x·D(G-N[u]) - (1+x)·p_u(G)

    Subproblems are evaluated by brute force; the recurrence is used as a
    verifiable identity, not as a speedup.
    """
    g._check_vertex(u)
    contracted = brute_force_poly(contract(g, u), budget_bits)
    deleted = brute_force_poly(delete_vertex(g, u), budget_bits)
    stripped = brute_force_poly(delete_closed_neighborhood(g, u), budget_bits)
    p_u = restricted_count(g, u, budget_bits)
    return X * contracted + deleted + X * stripped - (ONE + X) * p_u


def recurrence_poly_odot(g: Graph, u: int,
                         budget_bits: int = BRUTE_FORCE_BUDGET_BITS) -> IntPolynomial:
    """Triangle-removing recurrence:

        D(G) = D(G-u) + D(G⊙u) - D(G⊙u - u)

    where G⊙u deletes every edge joining two neighbors of u.
    """
    g._check_vertex(u)
    flattened = odot(g, u)
    return (brute_force_poly(delete_vertex(g, u), budget_bits)
            + brute_force_poly(flattened, budget_bits)
            - brute_force_poly(delete_vertex(flattened, u), budget_bits))


# -- closed forms ---------------------------------------------------------------

def family_poly(spec: FamilySpec) -> IntPolynomial:
    """Exact domination polynomial of a family member, without building the
    graph; usable far beyond the enumeration budget.

    The contracted book is deliberately computed through its structure
    (a hub joined to a clique-with-pendants, i.e. join + corona) rather than
    by reusing the friendship formula, so equality of the two is a real
    cross-check.
    """
    n = spec.n
    kind = spec.kind
    two_x_x2 = IntPolynomial((0, 2, 1))
    if kind == "friendship":
        return two_x_x2 ** n + X * (ONE + X) ** (2 * n)
    if kind == "book":
        return (two_x_x2 ** n * IntPolynomial((1, 2))
                + X ** 2 * (ONE + X) ** (2 * n)
                - 2 * X ** n)
    if kind == "book_contracted":
        pendant_clique = corona_poly(X, 1, n)  # clique of n, one pendant each
        return join_poly(X, 1, pendant_clique, 2 * n)
    if kind == "complete":
        return (ONE + X) ** n - ONE
    if kind == "empty":
        return X ** n
    if kind == "star":
        return join_poly(X, 1, X ** n, n)
    if kind == "path":
        return _path_poly(n)
    if kind == "cycle":
        return _cycle_poly(n)
    raise AssertionError(kind)


def _path_poly(n: int) -> IntPolynomial:
    """Left-to-right sweep; state of the last vertex: in the set, out but
    dominated, or out and still needing its right neighbor."""
    in_s, dominated, needy = X, IntPolynomial(), ONE
    for _ in range(n - 1):
        in_s, dominated, needy = (
            X * (in_s + dominated + needy),
            in_s,
            dominated,
        )
    return in_s + dominated


def _cycle_poly(n: int) -> IntPolynomial:
    """Same sweep as paths, split on the first/last vertices to close the
    cycle; n >= 3."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")

    def sweep(in_s, dominated, needy, steps):
        for _ in range(steps):
            in_s, dominated, needy = (
                X * (in_s + dominated + needy),
                in_s,
                dominated,
            )
        return in_s, dominated, needy

    # first vertex in the set: last vertex may stay needy (the wrap edge
    # dominates it)
    a0, a1, a2 = sweep(X * X, X, IntPolynomial(), n - 2)
    total = a0 + a1 + a2
    # first vertex out, second in: first is dominated; last must manage alone
    b0, b1, b2 = sweep(X, IntPolynomial(), IntPolynomial(), n - 2)
    total += b0 + b1
    # first and second out: last vertex must be in the set to dominate the first
    c0, c1, c2 = sweep(IntPolynomial(), IntPolynomial(), ONE, n - 3)
    total += X * (c0 + c1 + c2)
    return total


def corona_family_poly(kind: str, base_order: int, n: int, depth: int) -> IntPolynomial:
    """Iterated corona chain G∘H, (G∘H)∘H, ... with H a family member.

    Only |V(G)| = base_order matters for the polynomial.  depth is the
    number of corona applications.
    """
    if base_order < 1:
        raise ValueError("base_order must be >= 1")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    h_spec = FamilySpec(kind, n)
    h_poly = family_poly(h_spec)
    m = h_spec.order
    order = base_order
    poly = h_poly
    for _ in range(depth):
        poly = corona_poly(h_poly, m, order)
        order *= 1 + m
    return poly


def graph_poly(g: Graph, budget_bits: int = BRUTE_FORCE_BUDGET_BITS) -> IntPolynomial:
    """Domination polynomial of an arbitrary graph (brute force path)."""
    return brute_force_poly(g, budget_bits)


def all_method_polys(spec: FamilySpec,
                     budget_bits: int = BRUTE_FORCE_BUDGET_BITS) -> dict[str, IntPolynomial]:
    """Every applicable computation path for a family member, keyed by name.

    Brute force and the recurrences (pivoting on the distinguished vertex 0)
    are included only within the enumeration budget.
    """
    out = {"closed": family_poly(spec)}
    if spec.order <= budget_bits:
        g = build_family(spec)
        out["brute"] = brute_force_poly(g, budget_bits)
        out["recurrence-vertex"] = recurrence_poly_vertex(g, 0, budget_bits)
        out["recurrence-odot"] = recurrence_poly_odot(g, 0, budget_bits)
    return out
