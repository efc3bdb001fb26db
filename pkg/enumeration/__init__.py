from .coset_table import CosetTable, run_hlt, DEFAULT_MAX_COSETS
from .concrete_group import (
    ConcreteGroup, enumerate_group, evaluate, group_from_action, group_from_table,
    table_positions,
)
from .serialization import (
    dump_group, load_group, save_group, presentation_from_table, verify_group_axioms,
)

all = [
    CosetTable, run_hlt, DEFAULT_MAX_COSETS, ConcreteGroup, enumerate_group, evaluate,
    group_from_action, group_from_table, table_positions, dump_group, load_group, save_group,
    presentation_from_table, verify_group_axioms,
]
