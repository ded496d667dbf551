"""Todd-Coxeter coset enumeration over finite presentations.

The enumerator is the classic relator-scanning variant: cosets are scanned in
increasing order, every relator is traced from every live coset with gaps
filled by new definitions, and coincidences are processed immediately through
a union-find structure over coset ids.  Definition order is deterministic
(the lowest undefined table entry encountered during scanning is filled
first), so two runs over the same presentation produce identical tables.

Generator columns come in forward/inverse pairs; entries are written in both
directions on definition, and stale ids left behind by coincidences are
resolved lazily through ``find``.  Exceeding the coset bound is an expected
outcome for infinite groups and is reported as a status, not an exception.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentations import Presentation, Word

COMPLETE = "COMPLETE"
BOUND_EXCEEDED = "BOUND_EXCEEDED"


class Incomplete(RuntimeError):
    """Raised when a complete coset table is required but not available."""


@dataclass(frozen=True)
class CosetTable:
    """Outcome of an enumeration run.

    ``rows`` holds the compressed live table (one row per coset, columns
    alternating generator/inverse) when the run completed, else ``None``.
    ``coset_count`` is the number of cosets on completion, or the live count
    at the moment the bound was exceeded.
    """

    generators: tuple[str, ...]
    status: str
    coset_count: int
    rows: tuple[tuple[int, ...], ...] | None = None
    subgroup_generators: tuple[Word, ...] = ()

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def action(self, gen_index: int) -> tuple[int, ...]:
        """The permutation a generator induces on cosets (COMPLETE only)."""
        if not self.complete:
            raise Incomplete("no coset action: enumeration did not complete")
        col = 2 * gen_index
        return tuple(row[col] for row in self.rows)


class _Bound(Exception):
    pass


class _Enumerator:
    def __init__(self, generators, bound):
        self.ncols = 2 * len(generators)
        self.bound = bound
        self.rows = []
        self.parent = []
        self.live = 0
        self._new_coset()

    def _new_coset(self) -> int:
        if self.live + 1 > self.bound:
            raise _Bound
        c = len(self.rows)
        self.rows.append([-1] * self.ncols)
        self.parent.append(c)
        self.live += 1
        return c

    def find(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def _set(self, c: int, col: int, d: int):
        self.rows[c][col] = d
        self.rows[d][col ^ 1] = c

    def scan_and_fill(self, alpha: int, word_cols):
        rows = self.rows
        f = self.find(alpha)
        b = f
        i, j = 0, len(word_cols) - 1
        while True:
            while i <= j and rows[f][word_cols[i]] >= 0:
                f = self.find(rows[f][word_cols[i]])
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and rows[b][word_cols[j] ^ 1] >= 0:
                b = self.find(rows[b][word_cols[j] ^ 1])
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self._set(f, word_cols[i], b)
                return
            d = self._new_coset()
            self._set(f, word_cols[i], d)
            f = d
            i += 1

    def coincidence(self, a: int, b: int):
        queue = [(a, b)]
        rows = self.rows
        while queue:
            a, b = queue.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            self.parent[b] = a
            self.live -= 1
            row_a, row_b = rows[a], rows[b]
            for col in range(self.ncols):
                d = row_b[col]
                if d < 0:
                    continue
                e = row_a[col]
                if e < 0:
                    row_a[col] = d
                else:
                    queue.append((e, d))

    def run(self, relator_cols, subgroup_cols):
        for w in subgroup_cols:
            self.scan_and_fill(0, w)
        i = 0
        while i < len(self.rows):
            if self.parent[i] == i:
                for rel in relator_cols:
                    self.scan_and_fill(i, rel)
                    if self.parent[i] != i:
                        break
                if self.parent[i] == i:
                    # Define any still-missing neighbours so the table is
                    # total on termination (needed when a generator appears
                    # in no relator).
                    row = self.rows[i]
                    for col in range(self.ncols):
                        if row[col] < 0:
                            d = self._new_coset()
                            self._set(i, col, d)
            i += 1

    def compressed(self):
        renumber = {}
        for c in range(len(self.rows)):
            if self.parent[c] == c:
                renumber[c] = len(renumber)
        out = []
        for c, new in renumber.items():
            out.append(tuple(renumber[self.find(e)] for e in self.rows[c]))
        return tuple(out)


def _word_to_cols(word: Word, gen_index: dict) -> tuple[int, ...]:
    return tuple(
        2 * gen_index[name] + (0 if exp > 0 else 1) for name, exp in word.letters
    )


def todd_coxeter(
    pres: Presentation,
    subgroup_generators=(),
    coset_bound: int = 10_000,
) -> CosetTable:
    """Enumerate cosets of the subgroup generated by ``subgroup_generators``.

    With the empty subgroup, a COMPLETE run counts the elements of the
    presented group.  Returns status BOUND_EXCEEDED when the number of live
    cosets would pass ``coset_bound``.
    """
    if coset_bound < 1:
        raise ValueError("coset_bound must be >= 1")
    gen_index = {g: i for i, g in enumerate(pres.generators)}
    sub_words = tuple(subgroup_generators)
    for w in sub_words:
        unknown = w.generators() - set(pres.generators)
        if unknown:
            raise ValueError(f"subgroup word {w} uses unknown generators {unknown}")
    relator_cols = [_word_to_cols(r, gen_index) for r in pres.relators]
    subgroup_cols = [_word_to_cols(w.reduced(), gen_index) for w in sub_words]
    enum = _Enumerator(pres.generators, coset_bound)
    try:
        enum.run(relator_cols, subgroup_cols)
    except _Bound:
        return CosetTable(
            pres.generators, BOUND_EXCEEDED, enum.live, None, sub_words
        )
    rows = enum.compressed()
    return CosetTable(pres.generators, COMPLETE, len(rows), rows, sub_words)


def group_from_coset_table(table: CosetTable, provenance: str = ""):
    """Materialize the group of a completed trivial-subgroup enumeration.

    The generators act on cosets as permutations; the closure of those
    permutations is regular, so its order equals the coset count.
    """
    from . import groups  # deferred: groups also imports presentations

    if not table.complete:
        raise Incomplete("cannot realize a group from an incomplete table")
    if table.subgroup_generators:
        raise Incomplete("group realization requires the trivial subgroup")
    perms = [table.action(i) for i in range(len(table.generators))]
    return groups.close_under_product(
        perms,
        lambda p, q: tuple(q[x] for x in p),
        max_size=table.coset_count,
        generator_labels=list(table.generators),
        provenance=provenance or "coset action closure",
    )


@dataclass(frozen=True)
class AuditEntry:
    bound: int
    status: str
    cosets: int


@dataclass(frozen=True)
class AuditReport:
    """Empirical record of enumeration attempts at increasing bounds."""

    presentation_name: str
    entries: tuple[AuditEntry, ...]
    completed_order: int | None
    expected_divisor: int | None
    divisor_ok: bool | None

    @property
    def completed(self) -> bool:
        return self.completed_order is not None


def presentation_order_audit(
    pres: Presentation, bounds, expected_divisor: int | None = None
) -> AuditReport:
    """Run the enumeration at each bound and record what happened.

    No expectation is asserted: infinite groups legitimately exceed every
    bound.  When a run completes and ``expected_divisor`` is supplied (for
    presentations known to surject onto a group of that order), the report
    notes whether the order is a multiple of it.
    """
    entries = []
    completed_order = None
    for bound in bounds:
        result = todd_coxeter(pres, coset_bound=bound)
        entries.append(AuditEntry(bound, result.status, result.coset_count))
        if result.complete:
            completed_order = result.coset_count
            break
    divisor_ok = None
    if completed_order is not None and expected_divisor:
        divisor_ok = completed_order % expected_divisor == 0
    return AuditReport(
        pres.name or "<anonymous>",
        tuple(entries),
        completed_order,
        expected_divisor,
        divisor_ok,
    )
