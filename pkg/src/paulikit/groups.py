"""Finite groups materialized as element lists with Cayley tables.

One engine serves every construction in the toolkit: matrix closures,
quaternion closures, coset-action closures, direct/fiber/central products and
quotients.  Element handles are opaque; multiplication and equality are
injected into :func:`close_under_product`, after which everything operates on
the integer table alone.  Groups are immutable once built and safe to share.

Subgroups are index subsets into a parent group (embeddings stay explicit);
``Subgroup.to_group`` re-indexes a standalone copy when a construction needs
its own table, e.g. for an isomorphism check.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .presentations import Presentation, Word


class BoundExceeded(RuntimeError):
    def __init__(self, max_size: int):
        super().__init__(f"closure did not stabilize within {max_size} elements")
        self.max_size = max_size


class NotCentral(ValueError):
    """The designated element is not central in its factor."""


class OrderMismatch(ValueError):
    """The identified central elements have different orders."""


class NotSubgroup(ValueError):
    """An index subset is not closed under the parent group's table."""


class NotSurjective(ValueError):
    """A homomorphism required to be onto is not."""


class ConcreteGroup:
    """A finite group: opaque elements, labels, and an index Cayley table."""

    __slots__ = ("elements", "labels", "table", "identity", "inverses", "provenance")

    def __init__(self, elements, table, labels=None, provenance="", validate=True):
        self.elements = list(elements)
        self.table = [list(row) for row in table]
        n = len(self.elements)
        if labels is None:
            labels = [f"g{i}" for i in range(n)]
        self.labels = list(labels)
        self.provenance = provenance
        self.identity = self._find_identity()
        self.inverses = self._find_inverses()
        if validate:
            self.validate()

    @property
    def order(self) -> int:
        return len(self.elements)

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            row = self.table[e]
            if all(row[x] == x for x in range(n)) and all(
                self.table[x][e] == x for x in range(n)
            ):
                return e
        raise ValueError("table has no identity element")

    def _find_inverses(self):
        n = self.order
        inverses = [-1] * n
        e = self.identity
        for g in range(n):
            row = self.table[g]
            for h in range(n):
                if row[h] == e:
                    inverses[g] = h
                    break
            if inverses[g] < 0:
                raise ValueError(f"element {g} has no inverse")
        return inverses

    def validate(self):
        """Latin-square audit always; associativity audit for order <= 64."""
        n = self.order
        full = set(range(n))
        for g in range(n):
            if set(self.table[g]) != full:
                raise ValueError(f"row {g} is not a permutation")
            if {self.table[x][g] for x in range(n)} != full:
                raise ValueError(f"column {g} is not a permutation")
        if n <= 64:
            t = self.table
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    tab = ta[b]
                    tb = t[b]
                    for c in range(n):
                        if t[tab][c] != ta[tb[c]]:
                            raise ValueError(
                                f"associativity fails at ({a}, {b}, {c})"
                            )

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def conj(self, i: int, j: int) -> int:
        """j^-1 * i * j."""
        return self.mul(self.mul(self.inv(j), i), j)

    def power(self, i: int, n: int) -> int:
        result = self.identity
        base = i
        if n < 0:
            base, n = self.inv(i), -n
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k

    def evaluate_word(self, word: Word, images: dict) -> int:
        """Evaluate a word given an index image for each generator name."""
        acc = self.identity
        for name, exp in word.letters:
            g = images[name]
            acc = self.mul(acc, g if exp > 0 else self.inv(g))
        return acc

    def closure_of(self, indices) -> tuple[int, ...]:
        """Indices of the subgroup generated by the given element indices."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = [i for i in indices]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))

    def is_abelian(self) -> bool:
        n = self.order
        return all(
            self.table[i][j] == self.table[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def index_of(self, element, eq=None) -> int:
        if eq is None:
            for i, e in enumerate(self.elements):
                if e == element:
                    return i
        else:
            for i, e in enumerate(self.elements):
                if eq(e, element):
                    return i
        raise ValueError("element not found in group")

    def index_by_label(self, label: str) -> int:
        return self.labels.index(label)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "labels": list(self.labels),
            "identity": self.identity,
            "table": [list(row) for row in self.table],
            "provenance": self.provenance,
        }

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def __repr__(self):
        return f"<ConcreteGroup order={self.order} provenance={self.provenance!r}>"


def close_under_product(
    generators,
    mul,
    *,
    eq=None,
    max_size: int = 512,
    generator_labels=None,
    label_fn=None,
    provenance: str = "closure",
) -> ConcreteGroup:
    """Breadth-first closure of a generator list under an injected product.

    Elements are deduplicated with ``eq`` when given (linear scan; required
    for tolerance-based equality) and by hashing otherwise.  The element
    order of the result is the deterministic BFS discovery order, starting
    from the generators as given.  Raises :class:`BoundExceeded` when the
    closure exceeds ``max_size``.
    """
    if not generators:
        raise ValueError("need at least one generator")
    elements: list = []
    words: list[str] = []
    index_map: dict = {}

    if generator_labels is None:
        generator_labels = [f"a{i}" for i in range(len(generators))]

    def lookup(x):
        if eq is None:
            return index_map.get(x)
        for i, y in enumerate(elements):
            if eq(y, x):
                return i
        return None

    def add(x, word):
        if len(elements) + 1 > max_size:
            raise BoundExceeded(max_size)
        elements.append(x)
        words.append(word)
        if eq is None:
            index_map[x] = len(elements) - 1
        return len(elements) - 1

    gen_ids = []
    for g, lbl in zip(generators, generator_labels):
        i = lookup(g)
        if i is None:
            i = add(g, lbl)
        gen_ids.append(i)

    frontier = list(range(len(elements)))
    while frontier:
        nxt = []
        for xi in frontier:
            for gi, glbl in zip(gen_ids, generator_labels):
                p = mul(elements[xi], elements[gi])
                if lookup(p) is None:
                    nxt.append(add(p, f"{words[xi]}*{glbl}"))
        frontier = nxt

    n = len(elements)
    table = []
    for x in elements:
        row = []
        for y in elements:
            k = lookup(mul(x, y))
            if k is None:
                raise BoundExceeded(max_size)
            row.append(k)
        table.append(row)
    labels = [label_fn(x) for x in elements] if label_fn else words
    return ConcreteGroup(elements, table, labels, provenance)


def element_orders(group: ConcreteGroup) -> list[int]:
    return [group.element_order(i) for i in range(group.order)]


def order_multiset(group: ConcreteGroup) -> Counter:
    return Counter(element_orders(group))


def involution_count(group: ConcreteGroup) -> int:
    return order_multiset(group)[2]


@dataclass(frozen=True)
class Subgroup:
    """An index subset of a parent group, closed under its table."""

    group: ConcreteGroup
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        object.__setattr__(self, "indices", idx)
        members = set(idx)
        if self.group.identity not in members:
            raise NotSubgroup("subset does not contain the identity")
        for a in idx:
            if self.group.inv(a) not in members:
                raise NotSubgroup("subset not closed under inverses")
            for b in idx:
                if self.group.mul(a, b) not in members:
                    raise NotSubgroup("subset not closed under the table")

    @property
    def order(self) -> int:
        return len(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in set(self.indices)

    def to_group(self, provenance: str = "") -> ConcreteGroup:
        pos = {g: i for i, g in enumerate(self.indices)}
        table = [
            [pos[self.group.mul(a, b)] for b in self.indices] for a in self.indices
        ]
        return ConcreteGroup(
            [self.group.elements[g] for g in self.indices],
            table,
            [self.group.labels[g] for g in self.indices],
            provenance or f"subgroup of {self.group.provenance}",
        )


def center(group: ConcreteGroup) -> Subgroup:
    n = group.order
    idx = tuple(
        g
        for g in range(n)
        if all(group.table[g][h] == group.table[h][g] for h in range(n))
    )
    return Subgroup(group, idx)


def commutator_subgroup(group: ConcreteGroup) -> Subgroup:
    n = group.order
    comms = set()
    for a in range(n):
        ia = group.inv(a)
        for b in range(n):
            c = group.mul(group.mul(group.inv(b), ia), group.mul(b, a))
            comms.add(c)
    return Subgroup(group, group.closure_of(comms))


@dataclass(frozen=True)
class GroupHom:
    """A verified homomorphism, stored as an index map on all source elements."""

    source: ConcreteGroup
    target: ConcreteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.source.order:
            raise ValueError("image map must cover every source element")
        if self.images[self.source.identity] != self.target.identity:
            raise ValueError("homomorphism must send identity to identity")
        n = self.source.order
        for a in range(n):
            for b in range(n):
                if (
                    self.images[self.source.mul(a, b)]
                    != self.target.mul(self.images[a], self.images[b])
                ):
                    raise ValueError(f"not multiplicative at pair ({a}, {b})")

    @classmethod
    def from_generator_images(
        cls, source: ConcreteGroup, gen_indices, image_indices, target: ConcreteGroup
    ) -> "GroupHom":
        """Extend generator images along BFS factorizations of the source.

        The generators must generate the source group; multiplicativity of
        the extension is verified exhaustively by ``__post_init__``.
        """
        images = {source.identity: target.identity}
        frontier = [source.identity]
        gens = list(gen_indices)
        imgs = list(image_indices)
        while frontier:
            nxt = []
            for x in frontier:
                for g, img in zip(gens, imgs):
                    y = source.mul(x, g)
                    if y not in images:
                        images[y] = target.mul(images[x], img)
                        nxt.append(y)
            frontier = nxt
        if len(images) != source.order:
            raise ValueError("given elements do not generate the source group")
        return cls(source, target, tuple(images[i] for i in range(source.order)))

    def __call__(self, i: int) -> int:
        return self.images[i]

    def kernel(self) -> Subgroup:
        e = self.target.identity
        return Subgroup(
            self.source,
            tuple(i for i, im in enumerate(self.images) if im == e),
        )

    def image_subgroup(self) -> Subgroup:
        return Subgroup(self.target, tuple(set(self.images)))

    @property
    def surjective(self) -> bool:
        return len(set(self.images)) == self.target.order


@dataclass(frozen=True)
class PresentationHomReport:
    """Outcome of checking whether generator images satisfy a presentation."""

    accepted: bool
    failing_relator: Word | None
    images: tuple[int, ...]
    image: Subgroup | None
    surjective: bool


def hom_from_generator_images(
    pres: Presentation, images, target: ConcreteGroup
) -> PresentationHomReport:
    """Accept iff every relator evaluates to the identity in the target.

    On acceptance, also reports the subgroup generated by the images and
    whether the assignment is surjective.
    """
    images = tuple(images)
    if len(images) != len(pres.generators):
        raise ValueError("need exactly one image per generator")
    image_map = dict(zip(pres.generators, images))
    for rel in pres.relators:
        if target.evaluate_word(rel, image_map) != target.identity:
            return PresentationHomReport(False, rel, images, None, False)
    sub = Subgroup(target, target.closure_of(images))
    return PresentationHomReport(
        True, None, images, sub, sub.order == target.order
    )


def direct_product(g: ConcreteGroup, h: ConcreteGroup) -> ConcreteGroup:
    ng, nh = g.order, h.order
    elements = [(a, b) for a in range(ng) for b in range(nh)]
    pos = {p: i for i, p in enumerate(elements)}
    table = [
        [pos[(g.mul(a1, a2), h.mul(b1, b2))] for (a2, b2) in elements]
        for (a1, b1) in elements
    ]
    labels = [f"({g.labels[a]},{h.labels[b]})" for a, b in elements]
    return ConcreteGroup(
        elements,
        table,
        labels,
        f"direct product [{g.provenance} x {h.provenance}]",
    )


@dataclass(frozen=True)
class FiberProductResult:
    group: ConcreteGroup
    ker_delta1: Subgroup      # pairs (e, k2); isomorphic to ker(eps2)
    ker_delta2: Subgroup      # pairs (k1, e); isomorphic to ker(eps1)
    checks: dict


def fiber_product(eps1: GroupHom, eps2: GroupHom) -> FiberProductResult:
    """Subgroup of G1 x G2 of pairs agreeing under epimorphisms onto H.

    Verifies, by exhaustion, the three structural facts that make this a
    subdirect product: the projection kernels are copies of the opposite
    epimorphism kernels, their product is K1 x K2, and the quotient by
    K1 x K2 is isomorphic to H.
    """
    if eps1.target is not eps2.target and eps1.target.table != eps2.target.table:
        raise ValueError("epimorphisms must share the same target")
    if not eps1.surjective or not eps2.surjective:
        raise NotSurjective("both maps must be onto the common quotient")
    g1, g2, h = eps1.source, eps2.source, eps1.target
    elements = [
        (a, b)
        for a in range(g1.order)
        for b in range(g2.order)
        if eps1(a) == eps2(b)
    ]
    pos = {p: i for i, p in enumerate(elements)}
    table = [
        [pos[(g1.mul(a1, a2), g2.mul(b1, b2))] for (a2, b2) in elements]
        for (a1, b1) in elements
    ]
    labels = [f"({g1.labels[a]},{g2.labels[b]})" for a, b in elements]
    fiber = ConcreteGroup(
        elements,
        table,
        labels,
        "fiber product",
    )

    e1, e2 = g1.identity, g2.identity
    ker_d1 = Subgroup(
        fiber, tuple(i for i, (a, b) in enumerate(elements) if a == e1)
    )
    ker_d2 = Subgroup(
        fiber, tuple(i for i, (a, b) in enumerate(elements) if b == e2)
    )
    k1, k2 = eps1.kernel(), eps2.kernel()

    # (a) the projection kernels are canonically isomorphic to K2 and K1:
    # second (resp. first) components run exactly over the opposite kernel,
    # and the componentwise table makes the projection multiplicative.
    check_a = (
        sorted(elements[i][1] for i in ker_d1.indices) == list(k2.indices)
        and sorted(elements[i][0] for i in ker_d2.indices) == list(k1.indices)
    )

    # (b) ker_d1 * ker_d2 = K1 x K2 inside the fiber product.
    prod = {
        fiber.mul(i, j) for i in ker_d1.indices for j in ker_d2.indices
    }
    k1xk2 = {
        pos[(a, b)] for a in k1.indices for b in k2.indices
    }
    check_b = prod == k1xk2

    # (c) the quotient by K1 x K2 is isomorphic to H.
    quotient, _ = quotient_group(fiber, Subgroup(fiber, tuple(sorted(k1xk2))))
    iso, _ = is_isomorphic(quotient, h)
    check_c = iso

    size_ok = fiber.order * h.order == g1.order * g2.order
    return FiberProductResult(
        fiber,
        ker_d1,
        ker_d2,
        {
            "kernels_match": check_a,
            "kernel_product_is_k1xk2": check_b,
            "quotient_isomorphic_to_base": check_c,
            "order_product_law": size_ok,
        },
    )


def quotient_group(group: ConcreteGroup, normal: Subgroup):
    """Quotient by a normal subgroup; returns (quotient, projection map)."""
    members = set(normal.indices)
    for g in range(group.order):
        ig = group.inv(g)
        for n in normal.indices:
            if group.mul(group.mul(g, n), ig) not in members:
                raise ValueError("subgroup is not normal")
    coset_of = {}
    cosets = []
    for g in range(group.order):
        if g in coset_of:
            continue
        coset = frozenset(group.mul(g, n) for n in normal.indices)
        cid = len(cosets)
        cosets.append((g, coset))
        for x in coset:
            coset_of[x] = cid
    table = [
        [coset_of[group.mul(r1, r2)] for r2, _ in cosets] for r1, _ in cosets
    ]
    labels = [f"[{group.labels[r]}]" for r, _ in cosets]
    quotient = ConcreteGroup(
        [c for _, c in cosets],
        table,
        labels,
        f"quotient of {group.provenance}",
    )
    projection = [coset_of[g] for g in range(group.order)]
    return quotient, projection


@dataclass(frozen=True)
class CentralProductResult:
    group: ConcreteGroup
    image_a: Subgroup
    image_b: Subgroup
    projection: tuple[int, ...]


def central_product_quotient(
    a: ConcreteGroup, za: int, b: ConcreteGroup, zb: int
) -> CentralProductResult:
    """(A x B) / <(za, zb^-1)> for identified central elements of equal order.

    The images of A and B inside the quotient commute elementwise and
    generate it; the order is |A| * |B| / ord(za).
    """
    if za not in set(center(a).indices):
        raise NotCentral(f"element {a.labels[za]} is not central in the first factor")
    if zb not in set(center(b).indices):
        raise NotCentral(f"element {b.labels[zb]} is not central in the second factor")
    ord_za, ord_zb = a.element_order(za), b.element_order(zb)
    if ord_za != ord_zb:
        raise OrderMismatch(f"central element orders differ: {ord_za} vs {ord_zb}")
    product = direct_product(a, b)
    pos = {p: i for i, p in enumerate(product.elements)}
    zb_inv = b.inv(zb)
    gen = pos[(za, zb_inv)]
    cyclic = product.closure_of([gen])
    quotient, projection = quotient_group(product, Subgroup(product, cyclic))
    image_a = Subgroup(
        quotient, tuple(sorted({projection[pos[(x, b.identity)]] for x in range(a.order)}))
    )
    image_b = Subgroup(
        quotient, tuple(sorted({projection[pos[(a.identity, y)]] for y in range(b.order)}))
    )
    # Post-conditions of the construction, checked by exhaustion.
    for i in image_a.indices:
        for j in image_b.indices:
            if quotient.mul(i, j) != quotient.mul(j, i):
                raise AssertionError("factor images fail to commute")
    generated = quotient.closure_of(set(image_a.indices) | set(image_b.indices))
    if len(generated) != quotient.order:
        raise AssertionError("factor images fail to generate the quotient")
    return CentralProductResult(quotient, image_a, image_b, tuple(projection))


def is_central_product(group: ConcreteGroup, a_indices, b_indices) -> dict:
    """Decide whether ``group`` is the central product of two given subgroups.

    True iff every element factors as a*b and the subgroups commute
    elementwise.  When true, also reports the intersection and confirms it
    sits inside both centers.
    """
    sub_a = Subgroup(group, tuple(a_indices))  # NotSubgroup if not closed
    sub_b = Subgroup(group, tuple(b_indices))
    commute = all(
        group.mul(x, y) == group.mul(y, x)
        for x in sub_a.indices
        for y in sub_b.indices
    )
    products = {group.mul(x, y) for x in sub_a.indices for y in sub_b.indices}
    covers = len(products) == group.order
    result = {
        "is_central_product": commute and covers,
        "commute": commute,
        "covers": covers,
    }
    if result["is_central_product"]:
        inter = tuple(sorted(set(sub_a.indices) & set(sub_b.indices)))
        za = set(_center_indices_within(group, sub_a.indices))
        zb = set(_center_indices_within(group, sub_b.indices))
        result["intersection"] = inter
        result["intersection_central_in_both"] = set(inter) <= za and set(inter) <= zb
    return result


def _center_indices_within(group: ConcreteGroup, indices) -> tuple[int, ...]:
    members = list(indices)
    return tuple(
        g
        for g in members
        if all(group.mul(g, h) == group.mul(h, g) for h in members)
    )


# ---------------------------------------------------------------------------
# Isomorphism testing


def _invariants(group: ConcreteGroup):
    com = commutator_subgroup(group)
    return (
        group.order,
        tuple(sorted(order_multiset(group).items())),
        center(group).order,
        com.order,
        group.is_abelian(),
    )


def _greedy_generators(group: ConcreteGroup) -> list[int]:
    gens: list[int] = []
    closure = {group.identity}
    for i in range(group.order):
        if i not in closure:
            gens.append(i)
            closure = set(group.closure_of(gens))
            if len(closure) == group.order:
                break
    return gens


def _centralizer_size(group: ConcreteGroup, g: int) -> int:
    return sum(
        1 for h in range(group.order) if group.mul(g, h) == group.mul(h, g)
    )


def is_isomorphic(g: ConcreteGroup, h: ConcreteGroup):
    """Decide isomorphism for groups of order <= 256.

    Invariant screening first (order, element-order multiset, center size,
    commutator size, abelianness), then a backtracking search over images of
    a greedy minimal generating set, pruned by element order and centralizer
    size.  Returns ``(True, witness)`` with ``witness[i]`` the image index of
    element ``i``, or ``(False, None)``.
    """
    if g.order > 256 or h.order > 256:
        raise ValueError("isomorphism search is limited to order <= 256")
    if _invariants(g) != _invariants(h):
        return False, None

    gens = _greedy_generators(g)
    g_orders = [g.element_order(i) for i in range(g.order)]
    h_orders = [h.element_order(i) for i in range(h.order)]
    g_centralizers = [_centralizer_size(g, i) for i in range(g.order)]
    h_centralizers = [_centralizer_size(h, i) for i in range(h.order)]

    candidates = [
        [
            j
            for j in range(h.order)
            if h_orders[j] == g_orders[gen] and h_centralizers[j] == g_centralizers[gen]
        ]
        for gen in gens
    ]

    def extend(images):
        """Map the subgroup generated by assigned generators, or None."""
        mapping = {g.identity: h.identity}
        used = {h.identity}
        frontier = [g.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for gen, img in zip(gens[: len(images)], images):
                    y = g.mul(x, gen)
                    hy = h.mul(mapping[x], img)
                    if y in mapping:
                        if mapping[y] != hy:
                            return None
                    else:
                        if hy in used:
                            return None  # not injective
                        mapping[y] = hy
                        used.add(hy)
                        nxt.append(y)
            frontier = nxt
        return mapping

    def search(depth, images):
        if depth == len(gens):
            mapping = extend(images)
            if mapping is None or len(mapping) != g.order:
                return None
            return mapping
        for cand in candidates[depth]:
            images.append(cand)
            if extend(images) is not None:
                found = search(depth + 1, images)
                if found is not None:
                    return found
            images.pop()
        return None

    mapping = search(0, [])
    if mapping is None:
        return False, None
    witness = [mapping[i] for i in range(g.order)]
    # The extension is multiplicative by construction; assert anyway.
    for a in range(g.order):
        for b in range(g.order):
            assert witness[g.mul(a, b)] == h.mul(witness[a], witness[b])
    return True, witness
