"""Exception types shared across the package."""


class ShapeMismatchError(ValueError):
    """Operands carry incompatible subsystem shapes or matrix dimensions."""


class ContractViolationError(ValueError):
    """An input breaks a documented precondition (hermiticity, support, normalization)."""


class ResourceBudgetError(RuntimeError):
    """A requested dense object exceeds the configured dimension budget."""


class StructureViolationError(RuntimeError):
    """A computed object fails a structural identity it is required to satisfy."""
