from typing import Optional


class PresentationSyntaxError(ValueError):
    """Raised when DSL source does not follow the presentation grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownGeneratorError(ValueError):
    """Raised when a relation references an undeclared generator."""

    def __init__(self, name: str, line: Optional[int] = None, column: Optional[int] = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"Unknown generator '{name}'{where}")
        self.name = name
        self.line = line
        self.column = column


class UndefinedAbbreviationError(ValueError):
    pass


class EmptyPresentationError(ValueError):
    pass


class EnumerationBudgetExceeded(ValueError):
    """Raised when coset enumeration would need more live cosets than allowed."""

    def __init__(self, max_cosets: int):
        super().__init__(
            f"Coset enumeration exceeded {max_cosets} live cosets "
            f"(group may be infinite or too large)"
        )
        self.max_cosets = max_cosets


class ParameterRangeError(ValueError):
    """Raised when family parameters violate a declared side condition."""

    def __init__(self, family: str, condition: str):
        super().__init__(f"{family}: parameter side condition violated: {condition}")
        self.family = family
        self.condition = condition


class NoAdmissibleParameterError(ValueError):
    pass


class CapExceededError(ValueError):
    def __init__(self, what: str, order: int, cap: int):
        super().__init__(f"{what}: group order {order} exceeds cap {cap}")
        self.order = order
        self.cap = cap


class NotAPGroupError(ValueError):
    pass


class NotNormalError(ValueError):
    pass


class PairingError(ValueError):
    pass


class RedeiParameterizationError(ValueError):
    pass


class ClassificationConsistencyError(ValueError):
    pass


class OrderMismatchError(ValueError):
    """Raised when a family's presentation enumerates to the wrong order."""

    def __init__(self, label: str, order: int, expected: int):
        super().__init__(f"{label}: enumerated order {order}, family formula gives {expected}")
        self.order = order
        self.expected = expected
