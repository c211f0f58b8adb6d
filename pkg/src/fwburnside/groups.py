"""Finite groups as explicit multiplication tables, 0-based element indices.

A group of order n lives on indices 0..n-1 with an immutable n x n table.
Element ordering is fixed by the constructors (cyclic groups by exponent,
direct products lexicographically, permutation groups by lexicographic
permutation tuples, matrix groups by lexicographic entry tuples), so the
same spec string always yields the identical table.

Group-spec grammar (whitespace insignificant):

    C<n>            cyclic of order n
    D<n>            dihedral of order n (n even, n >= 4)
    Dic<n>          dicyclic of order n (4 | n); Q<n> is an alias for n = 2^k >= 8
    S<n>, A<n>      symmetric / alternating on n points (n <= 6)
    SL(2,<p>)       2x2 determinant-1 matrices over F_p (p prime, p <= 7)
    <spec>x<spec>   direct product, left associative
    perm:[<cycles>;...]   closure of explicit permutation generators,
                          e.g. perm:[(1,2,3)(4,5);(1,2)] with 1-based points
"""

from __future__ import annotations

import math
import re
from functools import reduce
from itertools import permutations

import numpy as np

from .errors import (
    AlgebraError,
    CapExceededError,
    InvalidParameterError,
    PreconditionError,
    SpecParseError,
)

DEFAULT_ORDER_CAP = 512


def bits(mask):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class Group:
    """Finite group on indices 0..n-1 with an explicit multiplication table."""

    __slots__ = ("mul", "n", "label", "identity", "inv", "_cache")

    def __init__(self, mul, label, check=False):
        self.mul = tuple(tuple(int(v) for v in row) for row in mul)
        self.n = len(self.mul)
        self.label = label
        self._cache = {}
        ident = None
        full = tuple(range(self.n))
        for e in range(self.n):
            if self.mul[e] == full and all(self.mul[x][e] == x for x in range(self.n)):
                ident = e
                break
        if ident is None:
            raise AlgebraError(f"table for {label!r} has no identity")
        self.identity = ident
        try:
            self.inv = tuple(row.index(ident) for row in self.mul)
        except ValueError:
            raise AlgebraError(f"table for {label!r} has a non-invertible element")
        if check:
            self.validate()

    def __repr__(self):
        return f"<Group {self.label} of order {self.n}>"

    def __len__(self):
        return self.n

    def elements(self):
        return range(self.n)

    def op(self, a, b):
        return self.mul[a][b]

    def conj(self, a, x):
        """a x a^-1."""
        return self.mul[self.mul[a][x]][self.inv[a]]

    def np_table(self):
        tab = self._cache.get("np_table")
        if tab is None:
            tab = np.array(self.mul, dtype=np.int32)
            tab.setflags(write=False)
            self._cache["np_table"] = tab
        return tab

    def conj_rows(self):
        """conj_rows()[a][x] = a x a^-1, as plain nested tuples."""
        rows = self._cache.get("conj_rows")
        if rows is None:
            mul, inv = self.mul, self.inv
            rows = tuple(
                tuple(mul[mul[a][x]][inv[a]] for x in range(self.n))
                for a in range(self.n)
            )
            self._cache["conj_rows"] = rows
        return rows

    def validate(self):
        """Exhaustively check the table axioms; raises AlgebraError on failure."""
        m = self.np_table()
        n = self.n
        if m.shape != (n, n):
            raise AlgebraError("table is not square")
        ar = np.arange(n)
        if not (np.sort(m, axis=1) == ar).all():
            raise AlgebraError(f"{self.label}: some row is not a permutation")
        if not (np.sort(m, axis=0) == ar[:, None]).all():
            raise AlgebraError(f"{self.label}: some column is not a permutation")
        for a in range(n):
            if not np.array_equal(m[m[a]], m[a][m]):
                raise AlgebraError(f"{self.label}: associativity fails at element {a}")

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.mul[x][a]
            k += 1
        return k

    def is_abelian(self):
        val = self._cache.get("abelian")
        if val is None:
            mul = self.mul
            val = all(
                mul[a][b] == mul[b][a] for a in range(self.n) for b in range(a + 1, self.n)
            )
            self._cache["abelian"] = val
        return val

    def exponent(self):
        return reduce(math.lcm, (self.element_order(a) for a in range(self.n)), 1)

    # -- subgroup constructors ------------------------------------------------

    def subgroup_from_mask(self, mask):
        return Subgroup(self, mask)

    def subgroup(self, members):
        """Build a subgroup from explicit members, checking the axioms."""
        sub = Subgroup(self, mask_of(members))
        sub.check()
        return sub

    def generated_subgroup(self, generators):
        mask = 1 << self.identity
        for g in generators:
            mask |= 1 << g
        mul = self.mul
        elems = list(bits(mask))
        frontier = elems
        while frontier:
            new = []
            for a in frontier:
                for b in elems:
                    for c in (mul[a][b], mul[b][a]):
                        if not (mask >> c) & 1:
                            mask |= 1 << c
                            new.append(c)
            elems.extend(new)
            frontier = new
        return Subgroup(self, mask)

    def trivial_subgroup(self):
        return Subgroup(self, 1 << self.identity)

    def full_subgroup(self):
        return Subgroup(self, (1 << self.n) - 1)

    def center(self):
        sub = self._cache.get("center")
        if sub is None:
            mul = self.mul
            mask = mask_of(
                z
                for z in range(self.n)
                if all(mul[z][g] == mul[g][z] for g in range(self.n))
            )
            sub = Subgroup(self, mask)
            self._cache["center"] = sub
        return sub


class Subgroup:
    """Subgroup of a parent group, stored as a bitmask over element indices."""

    __slots__ = ("parent", "mask", "members")

    def __init__(self, parent, mask):
        self.parent = parent
        self.mask = mask
        self.members = tuple(bits(mask))

    @property
    def order(self):
        return len(self.members)

    def __repr__(self):
        return f"<Subgroup of {self.parent.label}: order {self.order}, min {self.members[0]}>"

    def __contains__(self, x):
        return bool((self.mask >> x) & 1)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.mask == other.mask

    def __hash__(self):
        return hash((id(self.parent), self.mask))

    def __le__(self, other):
        if self.parent is not other.parent:
            raise PreconditionError("subgroups of different groups are not comparable")
        return self.mask & other.mask == self.mask

    def check(self):
        """Verify closure, identity, inverses, and Lagrange; raises on failure."""
        G = self.parent
        if G.identity not in self:
            raise AlgebraError("subgroup is missing the identity")
        for a in self.members:
            if G.inv[a] not in self:
                raise AlgebraError(f"subgroup not closed under inverse of {a}")
            row = G.mul[a]
            for b in self.members:
                if row[b] not in self:
                    raise AlgebraError(f"subgroup not closed under product {a}*{b}")
        if G.n % self.order != 0:
            raise AlgebraError("subgroup order does not divide the group order")

    def conjugate(self, a):
        """The subgroup a H a^-1."""
        crow = self.parent.conj_rows()[a]
        return Subgroup(self.parent, mask_of(crow[x] for x in self.members))

    def conjugate_mask(self, a):
        crow = self.parent.conj_rows()[a]
        return mask_of(crow[x] for x in self.members)

    def is_normal(self):
        return all(self.conjugate_mask(a) == self.mask for a in range(self.parent.n))

    def is_cyclic(self):
        k = self.order
        return any(self.parent.element_order(a) == k for a in self.members)

    def intersection(self, other):
        return Subgroup(self.parent, self.mask & other.mask)

    def product_mask(self, other):
        """The set product {h k}; a subgroup mask when either factor is normal."""
        mul = self.parent.mul
        return mask_of(mul[h][k] for h in self.members for k in other.members)


# -- quotients and embeddings -----------------------------------------------


class QuotientMap:
    """Projection G -> G/N, cosets represented by their minimal element index."""

    __slots__ = ("source", "target", "projection", "kernel", "coset_reps")

    def __init__(self, source, target, projection, kernel, coset_reps):
        self.source = source
        self.target = target
        self.projection = projection
        self.kernel = kernel
        self.coset_reps = coset_reps

    def __repr__(self):
        return f"<QuotientMap {self.source.label} -> {self.target.label}>"

    def push_subgroup(self, H):
        if H.parent is not self.source:
            raise PreconditionError("subgroup belongs to a different group")
        proj = self.projection
        return Subgroup(self.target, mask_of(proj[x] for x in H.members))

    def pull_subgroup(self, K):
        if K.parent is not self.target:
            raise PreconditionError("subgroup belongs to a different group")
        proj = self.projection
        kmask = K.mask
        return Subgroup(
            self.source, mask_of(x for x in range(self.source.n) if (kmask >> proj[x]) & 1)
        )


def _cyclic_pattern(table, q):
    return all(table[i][j] == (i + j) % q for i in range(q) for j in range(q))


def quotient_group(G, N):
    """Quotient map for a normal subgroup N; cached per (G, N)."""
    key = ("quotient", N.mask)
    qm = G._cache.get(key)
    if qm is not None:
        return qm
    if N.parent is not G:
        raise PreconditionError("kernel belongs to a different group")
    if not N.is_normal():
        raise PreconditionError(f"subgroup of order {N.order} is not normal in {G.label}")
    if N.order == 1:
        qm = QuotientMap(G, G, tuple(range(G.n)), N, tuple(range(G.n)))
        G._cache[key] = qm
        return qm
    mul = G.mul
    proj = [-1] * G.n
    reps = []
    for g in range(G.n):
        if proj[g] >= 0:
            continue
        t = len(reps)
        reps.append(g)
        for m in N.members:
            proj[mul[g][m]] = t
    q = len(reps)
    table = [[proj[mul[reps[i]][reps[j]]] for j in range(q)] for i in range(q)]
    if _cyclic_pattern(table, q):
        target = cyclic_group(q)
    else:
        target = Group(table, f"{G.label}/{N.order}@{N.members[0]}")
    qm = QuotientMap(G, target, tuple(proj), N, tuple(reps))
    G._cache[key] = qm
    return qm


class Embedding:
    """Injective homomorphism realizing a subgroup as a standalone group."""

    __slots__ = ("source", "parent", "map", "_inv")

    def __init__(self, source, parent, mapping):
        self.source = source
        self.parent = parent
        self.map = tuple(mapping)
        self._inv = {p: s for s, p in enumerate(self.map)}

    def __repr__(self):
        return f"<Embedding {self.source.label} -> {self.parent.label}>"

    def image_mask(self):
        return mask_of(self.map)

    def pull_mask(self, pmask):
        """Source mask of a parent mask; bits outside the image are an error."""
        m = 0
        for x in bits(pmask):
            m |= 1 << self._inv[x]
        return m

    def push_subgroup(self, H):
        if H.parent is not self.source:
            raise PreconditionError("subgroup belongs to a different group")
        return Subgroup(self.parent, mask_of(self.map[x] for x in H.members))

    def pull_subgroup(self, H):
        if H.parent is not self.parent:
            raise PreconditionError("subgroup belongs to a different group")
        return Subgroup(self.source, self.pull_mask(H.mask & self.image_mask()))


def subgroup_embedding(H):
    """Realize the subgroup H as a group in its own right; cached per (G, H)."""
    G = H.parent
    key = ("embedding", H.mask)
    emb = G._cache.get(key)
    if emb is not None:
        return emb
    if H.order == G.n:
        emb = Embedding(G, G, range(G.n))
    else:
        mem = H.members
        pos = {p: s for s, p in enumerate(mem)}
        k = len(mem)
        table = [[pos[G.mul[mem[i]][mem[j]]] for j in range(k)] for i in range(k)]
        if _cyclic_pattern(table, k):
            source = cyclic_group(k)
        else:
            source = Group(table, f"{G.label}>{H.order}@{mem[0]}")
        emb = Embedding(source, G, mem)
    G._cache[key] = emb
    return emb


def cyclic_generator(G):
    """Minimal-index element of full order; raises if the group is not cyclic."""
    for a in range(G.n):
        if G.element_order(a) == G.n:
            return a
    raise PreconditionError(f"{G.label} is not cyclic")


def cyclic_isomorphism(A, B, gen_a=None, gen_b=None):
    """Index map A -> B sending a chosen generator of A to one of B.

    Defaults to the minimal-index generator on both sides, which makes the
    map canonical; any generator pair yields some isomorphism.
    """
    if A.n != B.n:
        raise PreconditionError("cyclic groups of different orders are not isomorphic")
    if gen_a is None:
        gen_a = cyclic_generator(A)
    if gen_b is None:
        gen_b = cyclic_generator(B)
    if A.element_order(gen_a) != A.n or B.element_order(gen_b) != B.n:
        raise PreconditionError("chosen elements do not generate")
    mapping = [0] * A.n
    x, y = A.identity, B.identity
    for _ in range(A.n):
        mapping[x] = y
        x = A.mul[x][gen_a]
        y = B.mul[y][gen_b]
    return tuple(mapping)


# -- concrete tables ----------------------------------------------------------


def _cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _dihedral_table(n):
    # indices 0..m-1 are rotations r^i, m..n-1 are reflections s r^i
    m = n // 2
    table = [[0] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            table[i][j] = (i + j) % m
            table[i][m + j] = m + (j - i) % m
            table[m + i][j] = m + (i + j) % m
            table[m + i][m + j] = (j - i) % m
    return table


def _dicyclic_table(n):
    # generators a of order n/2 and b with b^2 = a^(n/4), b a b^-1 = a^-1;
    # indices 0..2m-1 are a^i, 2m..4m-1 are a^i b, where m = n/4
    m = n // 4
    h = 2 * m
    table = [[0] * n for _ in range(n)]
    for i in range(h):
        for j in range(h):
            table[i][j] = (i + j) % h
            table[i][h + j] = h + (i + j) % h
            table[h + i][j] = h + (i - j) % h
            table[h + i][h + j] = (i - j + m) % h
    return table


def _perm_group_table(perms):
    elems = sorted(perms)
    pos = {p: i for i, p in enumerate(elems)}
    table = [
        [pos[tuple(p[q[i]] for i in range(len(p)))] for q in elems] for p in elems
    ]
    return table


def _symmetric_perms(n):
    return [tuple(p) for p in permutations(range(n))]


def _perm_parity(p):
    seen = [False] * len(p)
    parity = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _sl2_elements(p):
    return [
        (a, b, c, d)
        for a in range(p)
        for b in range(p)
        for c in range(p)
        for d in range(p)
        if (a * d - b * c) % p == 1
    ]


def _sl2_table(p):
    elems = _sl2_elements(p)
    pos = {m: i for i, m in enumerate(elems)}
    table = []
    for a, b, c, d in elems:
        row = []
        for e, f, g, h in elems:
            row.append(
                pos[((a * e + b * g) % p, (a * f + b * h) % p,
                     (c * e + d * g) % p, (c * f + d * h) % p)]
            )
        table.append(row)
    return table


def direct_product(A, B):
    """Direct product with pair (i, j) at index i * |B| + j."""
    nb = B.n
    table = [
        [A.mul[i // nb][k // nb] * nb + B.mul[i % nb][k % nb] for k in range(A.n * nb)]
        for i in range(A.n * nb)
    ]
    return Group(table, f"{A.label}x{B.label}")


def _close_perms(gens, degree, cap):
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    gens = [tuple(g) for g in gens]
    while frontier:
        new = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in elems:
                    elems.add(q)
                    new.append(q)
                    if cap is not None and len(elems) > cap:
                        raise CapExceededError(
                            f"permutation closure exceeds the order cap {cap}"
                        )
        frontier = new
    return elems


# -- spec parsing -------------------------------------------------------------

_NUM_RE = re.compile(r"[0-9]+")

_PRIMES = {2, 3, 5, 7}


def _normalize_spec(text):
    return "".join(text.split())


def _split_top_level(norm):
    """Split on 'x' outside brackets; returns list of (atom_text, offset)."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(norm):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise SpecParseError("unbalanced bracket", i)
        elif ch == "x" and depth == 0:
            parts.append((norm[start:i], start))
            start = i + 1
    if depth != 0:
        raise SpecParseError("unbalanced bracket", len(norm))
    parts.append((norm[start:], start))
    return parts


def _parse_int(text, offset, pos):
    m = _NUM_RE.match(text, pos)
    if not m:
        raise SpecParseError("expected a number", offset + pos)
    return int(m.group()), m.end()


def _parse_cycles(body, offset):
    """Parse one generator like (1,2,3)(4,5) into a list of 0-based cycles."""
    cycles, pos, used = [], 0, set()
    while pos < len(body):
        if body[pos] != "(":
            raise SpecParseError("expected '(' in cycle notation", offset + pos)
        end = body.find(")", pos)
        if end < 0:
            raise SpecParseError("unterminated cycle", offset + pos)
        inner = body[pos + 1 : end]
        if not inner:
            raise SpecParseError("empty cycle", offset + pos)
        points = []
        for tok in inner.split(","):
            if not tok.isdigit():
                raise SpecParseError(f"bad cycle point {tok!r}", offset + pos)
            points.append(int(tok))
        if min(points) < 1:
            raise InvalidParameterError("cycle points are 1-based")
        points = [p - 1 for p in points]
        if used & set(points) or len(set(points)) != len(points):
            raise InvalidParameterError(f"cycles of one generator must be disjoint: {body!r}")
        used.update(points)
        cycles.append(points)
        pos = end + 1
    if not cycles:
        raise SpecParseError("generator has no cycles", offset)
    return cycles


def _parse_atom(text, offset):
    """Parse a single atom into a recipe tuple; offsets feed error messages."""
    if not text:
        raise SpecParseError("empty group spec", offset)
    if text.startswith("perm:["):
        if not text.endswith("]"):
            raise SpecParseError("perm spec must end with ']'", offset + len(text))
        body = text[len("perm:[") : -1]
        gens = [
            _parse_cycles(part, offset + len("perm:["))
            for part in body.split(";")
            if part != ""
        ]
        if not gens:
            raise SpecParseError("perm spec has no generators", offset)
        return ("perm", gens, text)
    if text.startswith("SL"):
        m = re.match(r"SL\((\d+),(\d+)\)$", text)
        if not m:
            raise SpecParseError(f"malformed SL spec {text!r}", offset)
        dim, p = int(m.group(1)), int(m.group(2))
        if dim != 2:
            raise InvalidParameterError("only SL(2,p) is supported")
        if p not in _PRIMES:
            raise InvalidParameterError(f"SL(2,{p}) needs a prime p <= 7")
        return ("sl2", p, text)
    m = re.match(r"(Dic|C|D|Q|S|A)(\d+)$", text)
    if not m:
        raise SpecParseError(f"unrecognized group spec {text!r}", offset)
    kind, n = m.group(1), int(m.group(2))
    if kind == "C":
        if n < 1:
            raise InvalidParameterError("cyclic groups need n >= 1")
        return ("cyclic", n, text)
    if kind == "D":
        if n < 4 or n % 2:
            raise InvalidParameterError(f"D{n}: dihedral order must be even and >= 4")
        return ("dihedral", n, text)
    if kind == "Dic":
        if n % 4:
            raise InvalidParameterError(f"Dic{n}: dicyclic order must be divisible by 4")
        return ("dicyclic", n, text)
    if kind == "Q":
        if n < 8 or n & (n - 1):
            raise InvalidParameterError(f"Q{n}: quaternion order must be 2^k >= 8")
        return ("dicyclic", n, text)
    if n > 6:
        raise InvalidParameterError(f"{kind}{n}: only degrees up to 6 are supported")
    if n < 1:
        raise InvalidParameterError(f"{kind}{n}: degree must be >= 1")
    return ("symmetric" if kind == "S" else "alternating", n, text)


def parse_group_spec(text):
    """Parse a spec string into a list of atom recipes (one per product factor)."""
    norm = _normalize_spec(text)
    if not norm:
        raise SpecParseError("empty group spec", 0)
    return [_parse_atom(part, off) for part, off in _split_top_level(norm)]


def _build_atom(recipe, cap):
    kind, arg, label = recipe
    if kind == "cyclic":
        _check_cap(arg, cap, label)
        return Group(_cyclic_table(arg), label)
    if kind == "dihedral":
        _check_cap(arg, cap, label)
        return Group(_dihedral_table(arg), label)
    if kind == "dicyclic":
        _check_cap(arg, cap, label)
        return Group(_dicyclic_table(arg), label)
    if kind == "symmetric":
        _check_cap(math.factorial(arg), cap, label)
        return Group(_perm_group_table(_symmetric_perms(arg)), label)
    if kind == "alternating":
        order = max(1, math.factorial(arg) // 2)
        _check_cap(order, cap, label)
        evens = [p for p in _symmetric_perms(arg) if _perm_parity(p) == 0]
        return Group(_perm_group_table(evens), label)
    if kind == "sl2":
        p = arg
        _check_cap(p * (p * p - 1), cap, label)
        return Group(_sl2_table(p), label)
    if kind == "perm":
        degree = 1 + max(pt for gen in arg for cyc in gen for pt in cyc)
        gens = []
        for gen in arg:
            perm = list(range(degree))
            for cyc in gen:
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    perm[a] = b
            gens.append(tuple(perm))
        elems = _close_perms(gens, degree, cap)
        return Group(_perm_group_table(elems), label)
    raise AssertionError(f"unknown recipe kind {kind}")


def _check_cap(order, cap, label):
    if cap is not None and order > cap:
        raise CapExceededError(f"{label} has order {order}, above the cap {cap}")


_GROUP_CACHE = {}


def construct_group(spec, cap=DEFAULT_ORDER_CAP):
    """Build (or fetch) the group named by a spec string.

    Identical specs return the identical Group instance, so per-group caches
    (lattices, mark tables) are shared across call sites.
    """
    norm = _normalize_spec(spec)
    cached = _GROUP_CACHE.get(norm)
    if cached is not None:
        _check_cap(cached.n, cap, norm)
        return cached
    recipes = parse_group_spec(norm)
    total = 1
    factors = []
    for recipe in recipes:
        label = recipe[2]
        g = _GROUP_CACHE.get(label)
        if g is None:
            g = _build_atom(recipe, cap)
            g.validate()
            _GROUP_CACHE[label] = g
        total *= g.n
        _check_cap(total, cap, norm)
        factors.append(g)
    G = reduce(direct_product, factors)
    if norm not in _GROUP_CACHE:
        G.validate()
        _GROUP_CACHE[norm] = G
    else:
        G = _GROUP_CACHE[norm]
    return G


def cyclic_group(n):
    """The canonical cyclic group of order n (shared instance)."""
    return construct_group(f"C{n}", cap=None)
