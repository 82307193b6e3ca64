"""Finitely generated abelian groups in invariant-factor normal form.

A group is Z^r x Z_{m1} x ... x Z_{ms} with 2 <= m1 | m2 | ... | ms.
Elements are integer coordinate vectors, free coordinates first; torsion
coordinates are kept reduced modulo their factor order.  Two groups compare
equal exactly when their normal forms coincide, which by the structure
theorem means they are isomorphic.  All arithmetic is exact.
"""

from __future__ import annotations

import itertools
import math


class GroupMismatchError(ValueError):
    """Raised when elements of different parent groups are combined."""


class AutBoundError(ValueError):
    """Automorphism enumeration refused: group infinite or too large."""


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors(orders) -> tuple[int, ...]:
    """Invariant-factor chain of a direct sum of cyclic groups of the given orders."""
    by_prime: dict[int, list[int]] = {}
    for m in orders:
        m = int(m)
        if m < 1:
            raise ValueError(f"cyclic order must be positive, got {m}")
        for p, e in _factor(m).items():
            by_prime.setdefault(p, []).append(e)
    for exps in by_prime.values():
        exps.sort(reverse=True)
    depth = max((len(v) for v in by_prime.values()), default=0)
    chain = []
    for layer in range(depth):
        f = 1
        for p, exps in by_prime.items():
            if layer < len(exps):
                f *= p ** exps[layer]
        chain.append(f)
    chain.reverse()
    return tuple(f for f in chain if f > 1)


class AbelianGroup:
    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank: int = 0, torsion=()):
        free_rank = int(free_rank)
        torsion = tuple(int(m) for m in torsion)
        if free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for m in torsion:
            if m < 2:
                raise ValueError(f"torsion orders must be >= 2, got {m}")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(f"torsion orders must form a divisibility chain: {torsion}")
        self.free_rank = free_rank
        self.torsion = torsion

    @classmethod
    def from_cyclic_orders(cls, orders, free_rank: int = 0) -> "AbelianGroup":
        """Normal form of Z^free_rank x (direct sum of cyclic groups of given orders)."""
        return cls(free_rank, invariant_factors(orders))

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls(0, ())

    @property
    def rank(self) -> int:
        return self.free_rank + len(self.torsion)

    def order(self):
        """Group order, or None if infinite."""
        if self.free_rank:
            return None
        return math.prod(self.torsion) if self.torsion else 1

    def exponent(self) -> int:
        if self.free_rank:
            raise ValueError("infinite group has no finite exponent")
        return self.torsion[-1] if self.torsion else 1

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def is_elementary_two(self) -> bool:
        return self.free_rank == 0 and all(m == 2 for m in self.torsion)

    def element(self, coords) -> "GroupElement":
        return GroupElement(self, coords)

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def generators(self) -> list["GroupElement"]:
        gens = []
        for i in range(self.rank):
            coords = [0] * self.rank
            coords[i] = 1
            gens.append(GroupElement(self, coords))
        return gens

    def elements(self):
        """Iterate all elements (finite groups only), in lexicographic coordinate order."""
        if self.free_rank:
            raise ValueError("cannot enumerate an infinite group")
        for coords in itertools.product(*(range(m) for m in self.torsion)):
            yield GroupElement(self, coords)

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup.from_cyclic_orders(
            self.torsion + other.torsion, self.free_rank + other.free_rank
        )

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.free_rank == other.free_rank and self.torsion == other.torsion

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __repr__(self):
        return f"AbelianGroup(free_rank={self.free_rank}, torsion={list(self.torsion)})"

    def pretty(self) -> str:
        """Human-readable name, e.g. 'Z^2 × Z2^3 × Z4'."""
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        for m, grp in itertools.groupby(self.torsion):
            c = len(list(grp))
            parts.append(f"Z{m}" if c == 1 else f"Z{m}^{c}")
        return " × ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> "AbelianGroup":
        return cls(data.get("free_rank", 0), data.get("torsion", ()))


def parse_group_string(text: str) -> AbelianGroup:
    """Parse 'Z2xZ2', 'Z3^2', 'ZxZ2^3', '1' into a group in normal form."""
    text = text.strip()
    if text in ("1", "0", "triv", "trivial", ""):
        return AbelianGroup.trivial()
    free = 0
    orders: list[int] = []
    for part in text.replace("×", "x").split("x"):
        part = part.strip()
        base, _, power = part.partition("^")
        count = int(power) if power else 1
        if count < 1:
            raise ValueError(f"bad multiplicity in group spec: {part!r}")
        base = base.strip()
        if not base.startswith("Z"):
            raise ValueError(f"cannot parse group factor {part!r}")
        digits = base[1:].strip()
        if digits == "":
            free += count
        else:
            orders.extend([int(digits)] * count)
    return AbelianGroup.from_cyclic_orders(orders, free)


class GroupElement:
    __slots__ = ("group", "coords")

    def __init__(self, group: AbelianGroup, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != group.rank:
            raise ValueError(f"expected {group.rank} coordinates, got {len(coords)}")
        r = group.free_rank
        reduced = coords[:r] + tuple(
            c % m for c, m in zip(coords[r:], group.torsion)
        )
        self.group = group
        self.coords = reduced

    def _check(self, other: "GroupElement"):
        if not isinstance(other, GroupElement) or self.group != other.group:
            raise GroupMismatchError("elements belong to different groups")

    def __add__(self, other):
        self._check(other)
        return GroupElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return GroupElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GroupElement(self.group, tuple(-a for a in self.coords))

    def __mul__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return GroupElement(self.group, tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def order(self):
        """Element order, or None if infinite."""
        r = self.group.free_rank
        if any(self.coords[:r]):
            return None
        n = 1
        for c, m in zip(self.coords[r:], self.group.torsion):
            if c:
                n = math.lcm(n, m // math.gcd(c, m))
        return n

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.group == other.group and self.coords == other.coords

    def __hash__(self):
        return hash((self.group.free_rank, self.group.torsion, self.coords))

    def __repr__(self):
        return f"<{','.join(map(str, self.coords))}>"


class GroupHomomorphism:
    """Homomorphism given by the images of the source generators (free first)."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: AbelianGroup, target: AbelianGroup, images):
        images = tuple(images)
        if len(images) != source.rank:
            raise ValueError("one image per source generator required")
        for img in images:
            if img.group != target:
                raise GroupMismatchError("image lies outside the target group")
        for gen_order, img in zip(source.torsion, images[source.free_rank:]):
            if not (gen_order * img).is_zero():
                raise ValueError(
                    f"image of an order-{gen_order} generator must have order dividing {gen_order}"
                )
        self.source = source
        self.target = target
        self.images = images

    @classmethod
    def identity(cls, group: AbelianGroup) -> "GroupHomomorphism":
        return cls(group, group, group.generators())

    def __call__(self, el: GroupElement) -> GroupElement:
        if el.group != self.source:
            raise GroupMismatchError("element not in the source group")
        out = self.target.zero()
        for c, img in zip(el.coords, self.images):
            if c:
                out = out + c * img
        return out

    def compose(self, other: "GroupHomomorphism") -> "GroupHomomorphism":
        """self o other."""
        if other.target != self.source:
            raise GroupMismatchError("homomorphisms do not compose")
        return GroupHomomorphism(other.source, self.target, tuple(self(i) for i in other.images))

    def is_bijective(self) -> bool:
        if self.source.order() is None or self.source.order() != self.target.order():
            return False
        seen = {self(x).coords for x in self.source.elements()}
        return len(seen) == self.source.order()

    def __eq__(self, other):
        if not isinstance(other, GroupHomomorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and tuple(i.coords for i in self.images) == tuple(i.coords for i in other.images)
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(i.coords for i in self.images)))

    def __repr__(self):
        return f"GroupHomomorphism({[i.coords for i in self.images]})"


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(matrix):
    """Exact Smith normal form with transforms.

    Returns (d, u, v) with u * matrix * v == d, where u and v are unimodular
    and d is diagonal with nonnegative entries forming a divisibility chain.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    for row in a:
        if len(row) != n:
            raise ValueError("ragged matrix")
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q*row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q*col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # move the smallest-magnitude nonzero of the trailing block to (t, t)
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        while True:
            pi, pj = pivot
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
            if a[t][t] < 0:
                row_neg(t)
            # clear row and column t by division with remainder
            for i in range(t + 1, m):
                if a[i][t]:
                    row_op(i, t, a[i][t] // a[t][t])
            for j in range(t + 1, n):
                if a[t][j]:
                    col_op(j, t, a[t][j] // a[t][t])
            pivot = None
            for i in range(t + 1, m):
                if a[i][t]:
                    pivot = (i, t)
                    break
            if pivot is None:
                for j in range(t + 1, n):
                    if a[t][j]:
                        pivot = (t, j)
                        break
            if pivot is None:
                # make the pivot divide the remaining block, else fold the
                # offending row in and repeat
                offender = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % a[t][t]:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                row_op(t, offender, -1)
                pivot = (t, t)
        t += 1

    d = [[a[i][j] if i == j else 0 for j in range(n)] for i in range(m)]
    return d, u, v


def universal_abelian_group(labels, relations):
    """Quotient of the free abelian group on `labels` by integer relation vectors.

    Returns (group, projection) where projection maps each label to its image
    in the normal-form quotient.  Empty relations yield a free group.
    """
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate degree labels")
    n = len(labels)
    rows = sorted({tuple(int(c) for c in rel) for rel in relations if any(rel)})
    for rel in rows:
        if len(rel) != n:
            raise ValueError("relation vector length does not match generators")
    r = len(rows)
    # columns of `cols` are the relation vectors; quotient Z^n / (column span)
    cols = [[rows[j][i] for j in range(r)] for i in range(n)]
    if r == 0:
        diag = [0] * n
        u = [[int(i == j) for j in range(n)] for i in range(n)]
    else:
        d, u, _ = smith_normal_form(cols)
        diag = [d[i][i] if i < r else 0 for i in range(n)]
    free_rows = [i for i in range(n) if diag[i] == 0]
    tors_rows = [i for i in range(n) if diag[i] >= 2]
    group = AbelianGroup(len(free_rows), tuple(diag[i] for i in tors_rows))
    projection = {}
    for idx, label in enumerate(labels):
        coords = [u[i][idx] for i in free_rows] + [u[i][idx] for i in tors_rows]
        projection[label] = group.element(coords)
    return group, projection


# ---------------------------------------------------------------------------
# Subgroups, quotients, abstract types
# ---------------------------------------------------------------------------

def subgroup_generated(group: AbelianGroup, gens) -> frozenset:
    """All elements of the subgroup of a finite group generated by `gens`."""
    if not group.is_finite():
        raise ValueError("subgroup enumeration requires a finite group")
    current = {group.zero()}
    for g in gens:
        if g.group != group:
            raise GroupMismatchError("generator outside the group")
        span = set()
        step = group.zero()
        m = g.order()
        for _ in range(m):
            span.update(x + step for x in current)
            step = step + g
        current = span
    return frozenset(current)


def abstract_type(elements, add=None, zero=None) -> AbelianGroup:
    """Isomorphism type of a finite abelian group given by its element set.

    The type is recovered from the census of p-power torsion; `add`/`zero`
    may be supplied for coset-style items that are not GroupElement values.
    """
    items = list(elements)
    n = len(items)
    if add is None:
        add = lambda x, y: x + y
    if zero is None:
        zero = next(x for x in items if add(x, x) == x)
    order_list = []
    for x in items:
        k = 1
        acc = x
        while acc != zero:
            acc = add(acc, x)
            k += 1
        order_list.append(k)
    cyclic: list[int] = []
    for p in _factor(n):
        counts = []  # counts[k] = #elements with order dividing p^k
        k = 0
        while True:
            c = sum(1 for o in order_list if p ** k % o == 0)
            counts.append(c)
            if c == n or (k and counts[k] == counts[k - 1]):
                break
            k += 1
        logs = []
        for c in counts:
            e = 0
            while p ** e < c:
                e += 1
            if p ** e != c:
                raise ValueError("element census is not that of an abelian p-group")
            logs.append(e)
        depth = [logs[k] - logs[k - 1] for k in range(1, len(logs))]
        for j, dj in enumerate(depth):
            nxt = depth[j + 1] if j + 1 < len(depth) else 0
            cyclic.extend([p ** (j + 1)] * (dj - nxt))
    return AbelianGroup.from_cyclic_orders(cyclic)


def quotient_type(group: AbelianGroup, subgroup_elements) -> AbelianGroup:
    """Isomorphism type of group / <subgroup_elements> for a finite group."""
    sub = frozenset(subgroup_elements)
    if not sub:
        sub = frozenset([group.zero()])

    def rep(x: GroupElement) -> GroupElement:
        return min((x + s for s in sub), key=lambda e: e.coords)

    reps = {rep(x) for x in group.elements()}
    return abstract_type(reps, add=lambda a, b: rep(a + b), zero=rep(group.zero()))


def square_elements(group: AbelianGroup) -> frozenset:
    """The subgroup {2t : t in T} of a finite group, as an element set."""
    if not group.is_finite():
        raise ValueError("square subgroup requires a finite group")
    return frozenset(2 * t for t in group.elements())


def square_subgroup(group: AbelianGroup):
    """(type of T^[2], type of T / T^[2]) for a finite group T."""
    sq = square_elements(group)
    return abstract_type(sq), quotient_type(group, sq)


def character_group(group: AbelianGroup, m: int) -> AbelianGroup:
    """Hom(T, Z_m) of a finite group T, in normal form."""
    if not group.is_finite():
        raise ValueError("character group requires a finite support")
    if m < 1:
        raise ValueError("target order must be positive")
    return AbelianGroup.from_cyclic_orders(
        [g for g in (math.gcd(mi, m) for mi in group.torsion) if g > 1]
    )


def automorphism_group(group: AbelianGroup, *, element_bound: int = 256,
                       candidate_bound: int = 200_000) -> list[GroupHomomorphism]:
    """All automorphisms of a finite abelian group, by pruned brute force.

    Raises AutBoundError when the group is infinite, has more than
    `element_bound` elements, or the endomorphism search space exceeds
    `candidate_bound` candidates.
    """
    if not group.is_finite():
        raise AutBoundError("group is infinite")
    n = group.order()
    if n > element_bound:
        raise AutBoundError(f"|T| = {n} exceeds the bound {element_bound}")
    if group.is_trivial():
        return [GroupHomomorphism.identity(group)]
    elements = list(group.elements())
    gens = group.generators()
    orders = group.torsion
    candidates = []
    for m in orders:
        candidates.append([x for x in elements if (m * x).is_zero()])
    total = math.prod(len(c) for c in candidates)
    if total > candidate_bound:
        raise AutBoundError(
            f"{total} candidate endomorphisms exceed the bound {candidate_bound}"
        )

    results: list[GroupHomomorphism] = []
    k = len(gens)

    def extend(span: frozenset, g: GroupElement) -> frozenset:
        out = set()
        step = group.zero()
        for _ in range(g.order()):
            out.update(x + step for x in span)
            step = step + g
        return frozenset(out)

    def search(j: int, images: list, span: frozenset):
        remaining = math.prod(orders[j:]) if j < k else 1
        if len(span) * remaining < n:
            return
        if j == k:
            if len(span) == n:
                results.append(GroupHomomorphism(group, group, tuple(images)))
            return
        for x in candidates[j]:
            search(j + 1, images + [x], extend(span, x))

    search(0, [], frozenset([group.zero()]))
    return results
