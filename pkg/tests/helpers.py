from enumeration import enumerate_group
from families import FamilySpec, build
from presentation import parse_presentation


def group_of(text: str, label: str = ""):
    return enumerate_group(parse_presentation(text), label=label)


def family_group(family: str, **params):
    return build(FamilySpec(family=family, **params)).group
