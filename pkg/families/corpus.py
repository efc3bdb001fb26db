import logging
import os
import re
from typing import Dict, Iterable, List, NamedTuple, Optional

from classifiers import is_abelian
from enumeration import DEFAULT_MAX_COSETS, ConcreteGroup, enumerate_group, presentation_from_table
from families.builder import build, expected_order
from families.specs import FamilySpec
from kernel import (
    DEFAULT_ISOMORPHISM_CAP, DEFAULT_MAX_ORDER, all_subgroups, direct_product, group_invariants,
    isomorphic, quotient, subgroup_as_group,
)
from presentation import format_presentation, parse_presentation
from utils.errors import NoAdmissibleParameterError

logger = logging.getLogger(__name__)


class CorpusEntry(NamedTuple):
    label: str
    group: ConcreteGroup


# smallest legal parameters of each A2 family, per prime
PINNED_A2: Dict[int, List[FamilySpec]] = {
    2: [
        FamilySpec(family="A2Type1", m=1),
        FamilySpec(family="A2Type2", m=1),
        FamilySpec(family="A2Type3", m=1),
        FamilySpec(family="A2Type8"),
        FamilySpec(family="A2Type9", p=2, n=1, m=1),
        FamilySpec(family="A2Type10", p=2, n=2, m=1),
        FamilySpec(family="A2Type11"),
        FamilySpec(family="A2Type12", p=2, n=2, m=1),
        FamilySpec(family="A2Type13"),
        FamilySpec(family="A2Type14", p=2, m=3),
        FamilySpec(family="A2Type16", p=2, m=1),
        FamilySpec(family="A2Type17", p=2, r=2, s=0, t=0),
        FamilySpec(family="A2Type22"),
    ],
    3: [
        FamilySpec(family="A2Type4", p=3, m=2),
        FamilySpec(family="A2Type5", p=3, m=1),
        FamilySpec(family="A2Type6", p=3, m=1, variant="one"),
        FamilySpec(family="A2Type6", p=3, m=1, variant="nonresidue"),
        FamilySpec(family="A2Type7"),
        FamilySpec(family="A2Type9", p=3, n=1, m=1),
        FamilySpec(family="A2Type10", p=3, n=1, m=1),
        FamilySpec(family="A2Type12", p=3, n=1, m=1),
        FamilySpec(family="A2Type14", p=3, m=2),
        FamilySpec(family="A2Type15", p=3, m=1),
        FamilySpec(family="A2Type16", p=3, m=1, r=1),
        FamilySpec(family="A2Type17", p=3, r=1, s=1, t=0),
        FamilySpec(family="A2Type20"),
        FamilySpec(family="A2Type21"),
    ],
    5: [
        FamilySpec(family="A2Type4", p=5, m=1),
        FamilySpec(family="A2Type5", p=5, m=1),
        FamilySpec(family="A2Type6", p=5, m=1, variant="one"),
        FamilySpec(family="A2Type6", p=5, m=1, variant="nonresidue"),
        FamilySpec(family="A2Type9", p=5, n=1, m=1),
        FamilySpec(family="A2Type10", p=5, n=1, m=1),
        FamilySpec(family="A2Type12", p=5, n=1, m=1),
        FamilySpec(family="A2Type14", p=5, m=2),
        FamilySpec(family="A2Type15", p=5, m=1),
        FamilySpec(family="A2Type16", p=5, m=1, r=1),
        FamilySpec(family="A2Type16", p=5, m=1, r=2),
        FamilySpec(family="A2Type17", p=5, r=1, s=1, t=0),
        FamilySpec(family="A2Type18", p=5),
        FamilySpec(family="A2Type19", p=5, r=1),
        FamilySpec(family="A2Type19", p=5, r=2),
    ],
}


def primary_specs(p: int, cap: int) -> List[FamilySpec]:
    """Family instances of prime p with expected order at most ``cap``."""
    specs: List[FamilySpec] = []
    if p == 2:
        specs.append(FamilySpec(family="Q8"))
        specs.extend(FamilySpec(family="Dihedral", n=2 ** k) for k in range(3, 7))
    total = 2
    while p ** total <= cap:
        specs.extend(FamilySpec(family="MpMN", p=p, m=m, n=total - m) for m in range(2, total))
        specs.extend(
            FamilySpec(family="MpMN1", p=p, m=m, n=total - 1 - m)
            for m in range(1, total - 1)
            if m >= total - 1 - m >= 1 and (p != 2 or total - 1 >= 3)
        )
        total += 1
    specs.extend(PINNED_A2.get(p, []))
    selected = []
    for spec in specs:
        try:
            order = expected_order(spec)
        except NoAdmissibleParameterError as e:
            logger.info(f"[{spec.label()}] skipped: {e}")
            continue
        if order <= cap:
            selected.append(spec)
    return selected


class _IsomorphismIndex:
    """Groups seen so far, bucketed by invariants, for dedup by isomorphism."""

    def __init__(self, isomorphism_cap: int):
        self.isomorphism_cap = isomorphism_cap
        self.buckets: Dict[tuple, List[ConcreteGroup]] = {}

    def seen(self, g: ConcreteGroup) -> bool:
        if g.order > self.isomorphism_cap:
            return False
        bucket = self.buckets.get(group_invariants(g), [])
        return any(isomorphic(g, h, self.isomorphism_cap) for h in bucket)

    def add(self, g: ConcreteGroup):
        self.buckets.setdefault(group_invariants(g), []).append(g)


def _sections(entry: CorpusEntry, max_order: int) -> Iterable[CorpusEntry]:
    g = entry.group
    for h in all_subgroups(g, max_order):
        if 1 < h.order < g.order and not h.is_abelian:
            label = f"{entry.label}|sub<{','.join(h.generator_words())}>"
            yield CorpusEntry(label, subgroup_as_group(h, label=label).group)
    for n in all_subgroups(g, max_order):
        if 1 < n.order < g.order and n.is_normal:
            section = quotient(g, n, label=f"{entry.label}|quo<{','.join(n.generator_words())}>")
            if not is_abelian(section.group):
                yield CorpusEntry(section.group.label, section.group)


def standard_corpus(
    caps: Dict[int, int],
    max_cosets: int = DEFAULT_MAX_COSETS,
    max_order: int = DEFAULT_MAX_ORDER,
    isomorphism_cap: int = DEFAULT_ISOMORPHISM_CAP,
    dump_dir: Optional[str] = None,
) -> List[CorpusEntry]:
    """Family instances under the per-prime caps, their non-abelian sections,
    and direct products with C_p, C_p^2 and each other, deduplicated by isomorphism.

    Primary instances are always kept under their own labels. The result is
    sorted by label.
    """
    index = _IsomorphismIndex(isomorphism_cap)
    corpus: List[CorpusEntry] = []
    for p in sorted(caps):
        cap = min(caps[p], max_order)
        primaries = []
        for spec in primary_specs(p, cap):
            built = build(spec, max_cosets)
            primaries.append(CorpusEntry(built.spec.label(), built.group))
        if not primaries:
            continue
        for entry in primaries:
            index.add(entry.group)
        corpus.extend(primaries)

        extras: List[CorpusEntry] = []
        for entry in primaries:
            extras.extend(_sections(entry, max_order))
        cyclic = [
            build(FamilySpec(family="Cyclic", n=p ** k), max_cosets).group for k in (1, 2)
        ]
        for i, entry in enumerate(primaries):
            partners = [CorpusEntry(c.label, c) for c in cyclic] + primaries[i:]
            for other in partners:
                if entry.group.order * other.group.order > cap:
                    continue
                label = f"DirectProduct:{entry.label}x{other.label}"
                extras.append(CorpusEntry(label, direct_product(entry.group, other.group, label)))
        for entry in extras:
            if index.seen(entry.group):
                continue
            index.add(entry.group)
            corpus.append(entry)
        logger.info(f"[p={p}] {len(primaries)} family instances, {len(corpus)} corpus groups so far")

    corpus.sort(key=lambda entry: entry.label)
    if dump_dir:
        dump_corpus(corpus, dump_dir)
    return corpus


def _file_name(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9=,._-]+", "_", label) + ".grp"


def dump_corpus(corpus: List[CorpusEntry], directory: str):
    """One DSL file per entry, with the label as a leading comment."""
    os.makedirs(directory, exist_ok=True)
    for entry in corpus:
        presentation = entry.group.presentation or presentation_from_table(entry.group)
        with open(os.path.join(directory, _file_name(entry.label)), "w") as f:
            f.write(format_presentation(presentation, comment=entry.label))
    logger.info(f"Wrote {len(corpus)} presentations to {directory}")


def read_grp(path: str, max_cosets: int = DEFAULT_MAX_COSETS) -> CorpusEntry:
    """Parse and enumerate a .grp file; a leading ``# label`` comment names the group."""
    with open(path) as f:
        text = f.read()
    first = text.lstrip().splitlines()[0] if text.strip() else ""
    label = first[1:].strip() if first.startswith("#") else os.path.splitext(os.path.basename(path))[0]
    group = enumerate_group(parse_presentation(text), max_cosets=max_cosets, label=label)
    return CorpusEntry(label, group)


def load_corpus_dir(directory: str, max_cosets: int = DEFAULT_MAX_COSETS) -> List[CorpusEntry]:
    paths = sorted(
        os.path.join(directory, name) for name in os.listdir(directory) if name.endswith(".grp")
    )
    corpus = [read_grp(path, max_cosets) for path in paths]
    corpus.sort(key=lambda entry: entry.label)
    return corpus
