"""Subgroup lattices with conjugacy classes, Moebius values, and the
coefficient arithmetic behind the commutativity criteria.

Enumeration generates every cyclic subgroup directly from the elements and
then closes the collection under pairwise joins, so the result is provably
complete: any subgroup is the join of its cyclic subgroups. Subgroups are
ordered by (order, sorted member indices); conjugacy-class representatives
are the minimal subgroups of their classes under that order, which makes
every derived table (marks, idempotent coefficients) reproducible.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import PreconditionError
from .groups import Subgroup, bits, mask_of, quotient_group

__all__ = [
    "SubgroupLattice",
    "subgroup_lattice",
    "m_constant",
    "m_cyclic",
    "check_gcd_property",
    "is_generalized_quaternion",
    "double_cosets",
    "check_divisor_lemma",
    "totient",
    "p_part",
    "divisors",
]

GCD_METHODS = ("i", "ii", "iii", "iv", "sylow")


def totient(n):
    count = 0
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            count += 1
    return count


def p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _closure_mask(M, n, seed_mask):
    """Subgroup generated by the elements of seed_mask (which contains 1)."""
    S = np.fromiter(bits(seed_mask), dtype=np.int32)
    while True:
        P = np.unique(M[np.ix_(S, S)])
        if P.size == S.size:
            return mask_of(int(v) for v in P)
        if P.size * 2 > n:
            # only the whole group has more than n/2 elements
            return (1 << n) - 1
        S = P


def _all_subgroup_masks(G):
    n = G.n
    ident_mask = 1 << G.identity
    full = (1 << n) - 1
    mul = G.mul
    known = {ident_mask}
    for g in range(n):
        mask, x = ident_mask, g
        while not (mask >> x) & 1:
            mask |= 1 << x
            x = mul[x][g]
        known.add(mask)
    M = G.np_table()
    memo = {}
    frontier = list(known)
    while frontier:
        new = []
        for bm in frontier:
            for am in list(known):
                ab = am & bm
                if ab == am or ab == bm:
                    continue
                key = (am, bm) if am < bm else (bm, am)
                j = memo.get(key)
                if j is None:
                    if am.bit_count() * bm.bit_count() > (n // 2) * ab.bit_count():
                        j = full
                    else:
                        j = _closure_mask(M, n, am | bm)
                    memo[key] = j
                if j not in known:
                    known.add(j)
                    new.append(j)
        frontier = new
    return known


class SubgroupLattice:
    """All subgroups of a finite group, with conjugation and Moebius data."""

    __slots__ = (
        "group",
        "subgroups",
        "index",
        "classes",
        "class_of",
        "reps",
        "normalizer_idx",
        "below",
        "cyclic_flags",
        "class_labels",
        "_label_to_class",
        "_mu",
        "_cache",
    )

    def __init__(self, G):
        self.group = G
        self._cache = {}
        entries = sorted(
            (m.bit_count(), tuple(bits(m)), m) for m in _all_subgroup_masks(G)
        )
        self.subgroups = tuple(Subgroup(G, m) for _, _, m in entries)
        self.index = {s.mask: i for i, s in enumerate(self.subgroups)}
        count = len(self.subgroups)

        class_of = [-1] * count
        classes = []
        for i, s in enumerate(self.subgroups):
            if class_of[i] >= 0:
                continue
            orbit = sorted({self.index[s.conjugate_mask(a)] for a in range(G.n)})
            for j in orbit:
                class_of[j] = len(classes)
            classes.append(tuple(orbit))
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)
        self.reps = tuple(cls[0] for cls in classes)

        normalizer_idx = []
        for s in self.subgroups:
            nmask = mask_of(
                a for a in range(G.n) if s.conjugate_mask(a) == s.mask
            )
            normalizer_idx.append(self.index[nmask])
        self.normalizer_idx = tuple(normalizer_idx)
        for i, cls in enumerate(self.classes):
            norm = self.subgroups[normalizer_idx[cls[0]]]
            assert len(cls) * norm.order == G.n, "class size must equal [G : N_G(H)]"

        masks = [s.mask for s in self.subgroups]
        self.below = tuple(
            tuple(j for j in range(i + 1) if masks[j] & masks[i] == masks[j])
            for i in range(count)
        )

        mu = {}
        for h in range(count):
            hm = masks[h]
            for k in self.below[h]:
                if k == h:
                    mu[(k, h)] = 1
                    continue
                km = masks[k]
                acc = 0
                for x in self.below[h]:
                    if x != h and masks[x] & km == km:
                        acc += mu[(k, x)]
                mu[(k, h)] = -acc
        self._mu = mu

        self.cyclic_flags = tuple(s.is_cyclic() for s in self.subgroups)

        labels = []
        seen = {}
        for c, rep in enumerate(self.reps):
            k = self.subgroups[rep].order
            labels.append(f"{k}:{seen.get(k, 0)}")
            seen[k] = seen.get(k, 0) + 1
        self.class_labels = tuple(labels)
        self._label_to_class = {lab: c for c, lab in enumerate(labels)}

    def __repr__(self):
        return (
            f"<SubgroupLattice of {self.group.label}: "
            f"{len(self.subgroups)} subgroups, {len(self.classes)} classes>"
        )

    def subgroup_index(self, H):
        if H.parent is not self.group:
            raise PreconditionError("subgroup belongs to a different group")
        idx = self.index.get(H.mask)
        assert idx is not None, "complete lattice is missing a subgroup"
        return idx

    def class_index(self, H):
        return self.class_of[self.subgroup_index(H)]

    def n_classes(self):
        return len(self.classes)

    def class_rep(self, c):
        return self.subgroups[self.reps[c]]

    def class_order(self, c):
        return self.subgroups[self.reps[c]].order

    def class_label(self, c):
        return self.class_labels[c]

    def class_by_label(self, label):
        c = self._label_to_class.get(label)
        if c is None:
            raise PreconditionError(
                f"no subgroup class {label!r} in {self.group.label}"
            )
        return c

    def normalizer(self, H):
        return self.subgroups[self.normalizer_idx[self.subgroup_index(H)]]

    def moebius(self, K, H):
        """Moebius value of the interval [K, H] in the subgroup lattice."""
        k, h = self.subgroup_index(K), self.subgroup_index(H)
        if K.mask & H.mask != K.mask:
            raise PreconditionError("moebius needs K <= H")
        return self._mu[(k, h)]

    def is_normal_class(self, c):
        return len(self.classes[c]) == 1

    def normal_class_indices(self):
        return tuple(c for c in range(len(self.classes)) if self.is_normal_class(c))

    def subgroups_containing(self, N):
        nm = N.mask
        return tuple(
            i for i, s in enumerate(self.subgroups) if s.mask & nm == nm
        )

    def frattini_of(self, H):
        """Intersection of the maximal proper subgroups of H (H itself if none)."""
        h = self.subgroup_index(H)
        interval = [j for j in self.below[h] if j != h]
        maximal = []
        for j in interval:
            jm = self.subgroups[j].mask
            if not any(
                x != j and self.subgroups[x].mask & jm == jm for x in interval
            ):
                maximal.append(j)
        mask = H.mask
        for j in maximal:
            mask &= self.subgroups[j].mask
        return Subgroup(self.group, mask)

    def frattini(self):
        sub = self._cache.get("frattini")
        if sub is None:
            sub = self.frattini_of(self.group.full_subgroup())
            self._cache["frattini"] = sub
        return sub

    def max_cyclic_intersection(self):
        """Intersection of the maximal cyclic subgroups."""
        sub = self._cache.get("maxcyc")
        if sub is None:
            cyc = [i for i, f in enumerate(self.cyclic_flags) if f]
            mask = (1 << self.group.n) - 1
            hit = False
            for i in cyc:
                im = self.subgroups[i].mask
                if not any(
                    j != i and self.subgroups[j].mask & im == im for j in cyc
                ):
                    mask &= im
                    hit = True
            assert hit, "every group has a maximal cyclic subgroup"
            sub = Subgroup(self.group, mask)
            self._cache["maxcyc"] = sub
        return sub

    def sylow(self, p):
        """A Sylow p-subgroup (canonically the first one in lattice order)."""
        q = p_part(self.group.n, p)
        for s in self.subgroups:
            if s.order == q:
                return s
        raise AssertionError("Sylow subgroup missing from a complete lattice")


def subgroup_lattice(G):
    """The (cached) subgroup lattice of G."""
    lat = G._cache.get("lattice")
    if lat is None:
        lat = SubgroupLattice(G)
        G._cache["lattice"] = lat
    return lat


def _is_normal_in(K, L):
    """K normal in L, both subgroups of the same parent."""
    if K.mask & L.mask != K.mask:
        return False
    crows = K.parent.conj_rows()
    for a in L.members:
        crow = crows[a]
        if mask_of(crow[x] for x in K.members) != K.mask:
            return False
    return True


def m_constant(lat, L, K):
    """(1/|L|) * sum of |X| mu(X, L) over subgroups X <= L with X K = L.

    Defined for K normal in L; this is the coefficient that deflation by K
    picks up on the primitive idempotent attached to L.
    """
    if not _is_normal_in(K, L):
        raise PreconditionError("m-constant needs K normal in L")
    li = lat.subgroup_index(L)
    km, ko = K.mask, K.order
    lo = L.order
    acc = 0
    for x in lat.below[li]:
        X = lat.subgroups[x]
        if X.order * ko == lo * (X.mask & km).bit_count():
            acc += X.order * lat._mu[(x, li)]
    return Fraction(acc, lo)


def m_cyclic(t, n):
    """Closed form of the m-constant for cyclic groups of orders t and n | t."""
    if t % n:
        raise PreconditionError("m_cyclic needs n | t")
    return Fraction(totient(t), n * totient(t // n))


def check_gcd_property(G, N, method="i"):
    """Whether |H ∩ N| = gcd(|H|, |N|) for every subgroup H of G.

    Methods "i".."iv" evaluate the four equivalent formulations (all
    subgroups vs. cyclic ones, intersection sizes vs. containment); "sylow"
    evaluates the prime-by-prime criterion and requires N normal.
    """
    if method not in GCD_METHODS:
        raise PreconditionError(f"unknown gcd method {method!r}")
    lat = subgroup_lattice(G)
    nm, no = N.mask, N.order
    if method in ("i", "iv"):
        for i, H in enumerate(lat.subgroups):
            if method == "iv" and not lat.cyclic_flags[i]:
                continue
            if (H.mask & nm).bit_count() != math.gcd(H.order, no):
                return False
        return True
    if method in ("ii", "iii"):
        for i, H in enumerate(lat.subgroups):
            if method == "iii" and not lat.cyclic_flags[i]:
                continue
            if no % H.order == 0 and H.mask & nm != H.mask:
                return False
        return True
    if not N.is_normal():
        raise PreconditionError("the sylow method needs N normal in G")
    for p in {f for f in range(2, G.n + 1) if G.n % f == 0 and _is_prime(f)}:
        np_, gp = p_part(no, p), p_part(G.n, p)
        if np_ == 1 or np_ == gp:
            continue
        P = lat.sylow(p)
        if P.is_cyclic():
            continue
        if p == 2 and np_ == 2 and is_generalized_quaternion(P):
            continue
        return False
    return True


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def is_generalized_quaternion(P):
    """Test P against the generalized quaternion presentation.

    Searches for a of order 2^(k-1) and b outside <a> with b^2 = a^(2^(k-2))
    and b a b^-1 = a^-1; coset counting then forces <a, b> = P, so finding
    such images is an isomorphism with the dicyclic group of order 2^k.
    """
    G = P.parent
    k = P.order
    if k < 8 or k & (k - 1):
        return False
    half = k // 2
    mul, inv = G.mul, G.inv
    for a in P.members:
        if G.element_order(a) != half:
            continue
        amask = 1 << G.identity
        x = a
        while not (amask >> x) & 1:
            amask |= 1 << x
            x = mul[x][a]
        a_sq = a
        for _ in range(half // 2 - 1):
            a_sq = mul[a_sq][a]
        a_inv = inv[a]
        for b in P.members:
            if (amask >> b) & 1:
                continue
            if mul[b][b] != a_sq:
                continue
            if mul[mul[b][a]][inv[b]] == a_inv:
                return True
    return False


def double_cosets(G, K, H):
    """Minimal-element representatives of the double cosets K g H."""
    if K.parent is not G or H.parent is not G:
        raise PreconditionError("double cosets need subgroups of the same group")
    mul = G.mul
    seen = 0
    reps = []
    for g in range(G.n):
        if (seen >> g) & 1:
            continue
        reps.append(g)
        for a in K.members:
            ag = mul[a][g]
            row = mul[ag]
            for b in H.members:
                seen |= 1 << row[b]
    return tuple(reps)


def check_divisor_lemma(G, N):
    """Order transfer between G and G/N: for each divisor d of |G|, G has a
    subgroup of order d exactly when G/N has one of order d / gcd(d, |N|)."""
    lat = subgroup_lattice(G)
    qm = quotient_group(G, N)
    qlat = subgroup_lattice(qm.target)
    orders_g = {s.order for s in lat.subgroups}
    orders_q = {s.order for s in qlat.subgroups}
    for d in divisors(G.n):
        if (d in orders_g) != (d // math.gcd(d, N.order) in orders_q):
            return False
    return True
