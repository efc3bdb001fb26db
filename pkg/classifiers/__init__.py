from .models import A1Type, Classification, MetahamiltonianResult
from .predicates import (
    is_abelian, is_dedekindian, is_hamiltonian, is_minimal_nonabelian, is_two_engel, a_degree,
    has_abelian_maximal_subgroup, minimal_nonabelian_subgroups, subgroups_by_index,
)
from .metacyclic import is_metacyclic, is_metacyclic_blackburn, blackburn_kernel
from .metahamiltonian import (
    is_metahamiltonian, is_metahamiltonian_definition, is_metahamiltonian_a1,
    is_metahamiltonian_derived,
)
from .redei import redei_type
from .classification import classify, a2_group_class, A2_CLASSES

all = [
    A1Type, Classification, MetahamiltonianResult, is_abelian, is_dedekindian, is_hamiltonian,
    is_minimal_nonabelian, is_two_engel, a_degree, has_abelian_maximal_subgroup,
    minimal_nonabelian_subgroups, subgroups_by_index, is_metacyclic, is_metacyclic_blackburn,
    blackburn_kernel, is_metahamiltonian, is_metahamiltonian_definition, is_metahamiltonian_a1,
    is_metahamiltonian_derived, redei_type, classify, a2_group_class, A2_CLASSES,
]
