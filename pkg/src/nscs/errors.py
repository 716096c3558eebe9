"""Exception hierarchy.

Every error carries enough context to print a one-line diagnostic; the CLI
maps the classes below onto exit codes.
"""


class NSCSError(Exception):
    """Base class for all library errors."""


class InvalidInput(NSCSError, ValueError):
    """Malformed input (exit code 2 at the CLI)."""


class EmptyInput(InvalidInput):
    pass


class GcdNotOne(InvalidInput):
    pass


class NotSorted(InvalidInput):
    pass


class PairOutOfRange(InvalidInput):
    def __init__(self, index, a, b):
        self.index, self.a, self.b = index, a, b
        super().__init__(f"pair {index} = ({a}, {b}) violates 2 <= a < b")


class CoprimalityViolation(InvalidInput):
    def __init__(self, i, j, g):
        self.i, self.j, self.gcd = i, j, g
        super().__init__(f"gcd(a_{i}, b_{j}) = {g} > 1 with {i} >= {j}")


class DimensionMismatch(InvalidInput):
    pass


class IndexOutOfRange(InvalidInput):
    pass


class Overflow(NSCSError, OverflowError):
    """A derived quantity does not fit the signed 64-bit range used by the kernels."""


class DomainNegative(NSCSError):
    """A well-formed question whose answer is 'no' (exit code 3)."""


class NotCompound(DomainNegative):
    NOT_MINIMAL = "NotMinimal"
    CRITERION_FAILS = "CriterionFails"

    def __init__(self, reason, detail=""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


class NotInSemigroup(DomainNegative):
    def __init__(self, n, gens=None):
        self.n = n
        where = f" <{', '.join(map(str, gens))}>" if gens is not None else ""
        super().__init__(f"{n} is not in the semigroup{where}")


class NotAnElement(DomainNegative):
    pass


class NotApplicable(DomainNegative):
    pass


class NotSameElement(DomainNegative):
    pass


class WorkBudgetExceeded(NSCSError):
    """Raised when a fiber has more factorizations than the configured budget (exit code 4)."""

    def __init__(self, n, budget):
        self.n, self.budget = n, budget
        super().__init__(f"element {n} has more than {budget} factorizations")
