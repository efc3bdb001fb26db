from .specs import FamilySpec
from .number_theory import (
    is_prime, smallest_quadratic_nonresidue, smallest_primitive_root, solve_j_type15,
    solve_j_type16, solve_l_type19, admissible_r,
)
from .catalog import FAMILIES, Family, a2_families
from .builder import BuiltGroup, build, resolve_spec, family_text, expected_order, get_family
from .corpus import (
    CorpusEntry, PINNED_A2, standard_corpus, primary_specs, dump_corpus, read_grp,
    load_corpus_dir,
)
from .identities import IDENTITIES, identity_group

all = [
    FamilySpec, is_prime, smallest_quadratic_nonresidue, smallest_primitive_root,
    solve_j_type15, solve_j_type16, solve_l_type19, admissible_r, FAMILIES, Family,
    a2_families, BuiltGroup, build, resolve_spec, family_text, expected_order, get_family,
    CorpusEntry, PINNED_A2, standard_corpus, primary_specs, dump_corpus, read_grp,
    load_corpus_dir, IDENTITIES, identity_group,
]
