"""Exception types shared across the package."""

from __future__ import annotations


class CombdimError(Exception):
    """Base class for all package errors."""


class FieldMismatch(CombdimError, ValueError):
    """Raised when values over different primes or ambients are combined."""


class BudgetExceeded(CombdimError):
    """An enumeration would exceed its configured budget.

    ``required`` is the number of items the operation would have to visit.
    """

    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f"{what}: requires {required} items, budget is {budget}")


class NotDecompositionIdeal(CombdimError):
    """The ideal is not a decomposition ideal of the module."""


class NotFundamental(CombdimError):
    """The given generator set is not fundamental."""


class NotCMorphism(CombdimError):
    """A matrix fails to be a morphism of triples, or its graph map is not a graph morphism."""


class NotDirected(CombdimError):
    """An ideal family is not directed under inclusion."""


class SchemaError(CombdimError, ValueError):
    """A serialized document does not match its schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
