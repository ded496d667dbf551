"""Free-group words, finite presentations, and presentation-building recipes.

A word is a sequence of (generator name, exponent) letters with exponents
restricted to +1/-1 after expansion.  A presentation is an ordered generator
list plus a list of relator words; relators are stored freely reduced and
deduplicated up to cyclic rotation.

The builders implement three recipes:

* ``quotient_presentation`` -- adjoin relators (presenting G/N where N is the
  normal closure of the new relators);
* ``svk_presentation`` -- amalgamated free product: generators are the union,
  relators are both relator sets plus one identification ``wU * wV^-1`` per
  amalgam pair (the empty amalgam gives the free product);
* ``central_product_presentation`` -- both relator sets, all cross-generator
  commutators, and one ``wA * wB`` identification per pairing.

The text format for presentation files::

    gens: u xy y
    rel: u^4
    rel: u^2 y^-2

Tokens are ``name`` or ``name^<int>``; exponents expand into +-1 sequences.
Lines starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources


class UnknownGenerator(ValueError):
    """A relator mentions a generator the presentation does not declare."""


class PresentationFormatError(ValueError):
    """A presentation file failed to parse; message carries the line number."""


_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Word:
    """A freely-spelled word: tuple of (generator, +-1) letters."""

    letters: tuple[tuple[str, int], ...] = ()

    @classmethod
    def from_pairs(cls, pairs) -> "Word":
        letters = []
        for name, exp in pairs:
            if exp == 0:
                continue
            step = 1 if exp > 0 else -1
            letters.extend((name, step) for _ in range(abs(exp)))
        return cls(tuple(letters))

    @classmethod
    def from_text(cls, text: str) -> "Word":
        """Parse ``"u^2 y^-2"``-style token strings."""
        pairs = []
        for token in text.split():
            if "^" in token:
                name, _, exp_s = token.partition("^")
                try:
                    exp = int(exp_s)
                except ValueError:
                    raise PresentationFormatError(f"bad exponent in token {token!r}")
            else:
                name, exp = token, 1
            if not _NAME_RE.match(name):
                raise PresentationFormatError(f"bad generator name in token {token!r}")
            pairs.append((name, exp))
        return cls.from_pairs(pairs)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((name, -exp) for name, exp in reversed(self.letters)))

    def __len__(self):
        return len(self.letters)

    def generators(self) -> set[str]:
        return {name for name, _ in self.letters}

    def reduced(self) -> "Word":
        return free_reduce(self)

    def cyclic_key(self) -> tuple:
        """Canonical key of the reduced word up to cyclic rotation."""
        letters = free_reduce(self).letters
        if not letters:
            return ()
        rotations = [letters[i:] + letters[:i] for i in range(len(letters))]
        return min(rotations)

    def to_text(self) -> str:
        """Token form with adjacent equal-generator runs collapsed."""
        tokens = []
        run_name, run_exp = None, 0
        for name, exp in self.letters:
            if name == run_name and (exp > 0) == (run_exp > 0):
                run_exp += exp
            else:
                if run_name is not None:
                    tokens.append(_token(run_name, run_exp))
                run_name, run_exp = name, exp
        if run_name is not None:
            tokens.append(_token(run_name, run_exp))
        return " ".join(tokens)

    def __str__(self):
        return self.to_text() or "<empty>"


def _token(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


def free_reduce(word: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain (idempotent)."""
    stack: list[tuple[str, int]] = []
    for letter in word.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def commutator_word(w1: Word, w2: Word) -> Word:
    """[w1, w2] = w1 w2 w1^-1 w2^-1, the relator form of ``w1 w2 = w2 w1``."""
    return w1 * w2 * w1.inverse() * w2.inverse()


def relation(lhs: Word, rhs: Word) -> Word:
    """The relator ``lhs * rhs^-1`` encoding the relation lhs = rhs."""
    return lhs * rhs.inverse()


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    name: str = ""
    provenance: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        seen = set()
        for g in gens:
            if not _NAME_RE.match(g):
                raise PresentationFormatError(f"bad generator name {g!r}")
            if g in seen:
                raise PresentationFormatError(f"duplicate generator {g!r}")
            seen.add(g)
        reduced, keys = [], set()
        for rel in self.relators:
            unknown = rel.generators() - seen
            if unknown:
                raise UnknownGenerator(
                    f"relator {rel} uses undeclared generator(s) {sorted(unknown)}"
                )
            r = free_reduce(rel)
            if not r.letters:
                continue
            key = r.cyclic_key()
            if key in keys:
                continue
            keys.add(key)
            reduced.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(reduced))

    def with_name(self, name: str) -> "Presentation":
        return Presentation(self.generators, self.relators, name, self.provenance)

    def to_text(self) -> str:
        lines = [f"gens: {' '.join(self.generators)}"]
        lines.extend(f"rel: {rel.to_text()}" for rel in self.relators)
        return "\n".join(lines) + "\n"

    def __str__(self):
        rels = ", ".join(str(r) for r in self.relators)
        return f"<{' '.join(self.generators)} | {rels}>"


def quotient_presentation(pres: Presentation, extra_relators) -> Presentation:
    """Same generators, relators extended by ``extra_relators``.

    Presents the quotient of the presented group by the normal closure of the
    extra relators.  Unknown generators raise :class:`UnknownGenerator`.
    """
    return Presentation(
        pres.generators,
        pres.relators + tuple(extra_relators),
        name=f"{pres.name}+quotient" if pres.name else "quotient",
        provenance=pres.provenance,
    )


def _rename_disjoint(pu: Presentation, pv: Presentation):
    """Rename pv's generators that collide with pu's; return (pv', mapping)."""
    taken = set(pu.generators)
    mapping = {}
    new_gens = []
    for g in pv.generators:
        if g in taken:
            candidate = g + "_2"
            while candidate in taken or candidate in pv.generators:
                candidate += "_"
            mapping[g] = candidate
            new_gens.append(candidate)
            taken.add(candidate)
        else:
            new_gens.append(g)
            taken.add(g)
    if not mapping:
        return pv, {}
    renamed_rels = tuple(
        Word(tuple((mapping.get(n, n), e) for n, e in rel.letters))
        for rel in pv.relators
    )
    return Presentation(tuple(new_gens), renamed_rels, pv.name, pv.provenance), mapping


def _apply_renaming(word: Word, mapping: dict) -> Word:
    if not mapping:
        return word
    return Word(tuple((mapping.get(n, n), e) for n, e in word.letters))


def svk_presentation(pu: Presentation, pv: Presentation, amalgam=()) -> Presentation:
    """Amalgamated free product of two presented groups.

    ``amalgam`` is a list of (word over pu, word over pv) pairs; each pair
    contributes the identification relator ``wu * wv^-1``.  An empty amalgam
    yields the free product.  Colliding generator names on the second factor
    are renamed (recorded in the provenance string).
    """
    pv2, renames = _rename_disjoint(pu, pv)
    identifications = tuple(
        relation(wu, _apply_renaming(wv, renames)) for wu, wv in amalgam
    )
    prov = ""
    if renames:
        prov = "renamed in second factor: " + ", ".join(
            f"{old}->{new}" for old, new in sorted(renames.items())
        )
    return Presentation(
        pu.generators + pv2.generators,
        pu.relators + pv2.relators + identifications,
        name=_combined_name(pu, pv, "amalgam" if amalgam else "free"),
        provenance=prov,
    )


def central_product_presentation(
    pa: Presentation, pb: Presentation, pairing=()
) -> Presentation:
    """Presentation of a central product from presentations of the factors.

    Adds every cross-generator commutator (the two factors commute
    elementwise) plus one relator ``wa * wb`` per pairing pair identifying a
    central element of the first factor with the inverse image in the second.
    The empty pairing presents the direct product.
    """
    pb2, renames = _rename_disjoint(pa, pb)
    commutators = tuple(
        commutator_word(Word(((s, 1),)), Word(((t, 1),)))
        for s in pa.generators
        for t in pb2.generators
    )
    identifications = tuple(
        wa * _apply_renaming(wb, renames) for wa, wb in pairing
    )
    prov = ""
    if renames:
        prov = "renamed in second factor: " + ", ".join(
            f"{old}->{new}" for old, new in sorted(renames.items())
        )
    return Presentation(
        pa.generators + pb2.generators,
        pa.relators + pb2.relators + commutators + identifications,
        name=_combined_name(pa, pb, "central"),
        provenance=prov,
    )


def _combined_name(p1: Presentation, p2: Presentation, kind: str) -> str:
    a = p1.name or "A"
    b = p2.name or "B"
    return f"{a}*{b}({kind})"


def parse_presentation(text: str, name: str = "") -> Presentation:
    """Parse the ``gens:``/``rel:`` text format; errors carry line numbers."""
    generators = None
    relators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("gens:"):
            if generators is not None:
                raise PresentationFormatError(f"line {lineno}: duplicate gens line")
            generators = tuple(line[len("gens:"):].split())
            if not generators:
                raise PresentationFormatError(f"line {lineno}: empty generator list")
        elif line.startswith("rel:"):
            if generators is None:
                raise PresentationFormatError(
                    f"line {lineno}: rel line before gens line"
                )
            try:
                relators.append(Word.from_text(line[len("rel:"):]))
            except PresentationFormatError as exc:
                raise PresentationFormatError(f"line {lineno}: {exc}") from None
        else:
            raise PresentationFormatError(
                f"line {lineno}: expected 'gens:' or 'rel:', got {line!r}"
            )
    if generators is None:
        raise PresentationFormatError("missing gens line")
    try:
        return Presentation(generators, tuple(relators), name=name)
    except (UnknownGenerator, PresentationFormatError) as exc:
        raise PresentationFormatError(str(exc)) from None


def load_presentation(path, name: str = "") -> Presentation:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_presentation(text, name=name or _stem(path))


def _stem(path) -> str:
    import os

    return os.path.splitext(os.path.basename(str(path)))[0]


#: Names of the presentation files shipped with the package.
BUNDLED_PRESENTATIONS = (
    "pauli_xyz",
    "pauli_uxy",
    "q8",
    "z4",
    "d8",
    "seifquo",
    "q8_free_z4",
)


def bundled_presentation_text(name: str) -> str:
    if name not in BUNDLED_PRESENTATIONS:
        raise KeyError(f"no bundled presentation {name!r}")
    return (
        resources.files("paulikit.data").joinpath(f"{name}.pres").read_text("utf-8")
    )


def bundled_presentation(name: str) -> Presentation:
    return parse_presentation(bundled_presentation_text(name), name=name)
