"""Exception types raised across the package."""


class HookFusionError(Exception):
    pass


class InvalidRankError(HookFusionError, ValueError):
    pass


class IndexRangeError(HookFusionError, ValueError):
    pass


class RankMismatchError(HookFusionError, ValueError):
    pass


class ResourceLimitError(HookFusionError):
    pass


class SingularParameterError(HookFusionError, ZeroDivisionError):
    pass


class NonStandardTableauError(HookFusionError, ValueError):
    pass


class InvalidMoveError(HookFusionError, ValueError):
    pass


class PoleError(HookFusionError, ArithmeticError):
    """A limit at epsilon = 0 does not exist: the numerator vanishes to lower order than the denominator."""

    def __init__(self, num_order, den_order, message=None):
        self.num_order = num_order
        self.den_order = den_order
        super().__init__(
            message or f"pole at epsilon=0: numerator order {num_order} < denominator order {den_order}"
        )
