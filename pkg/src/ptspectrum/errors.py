"""Exception hierarchy shared by the analysis pipeline."""


class MethodInapplicable(Exception):
    """The inertia method cannot decide this input (a mathematical outcome, not a bug)."""

    tag = "method-inapplicable"


class NotRealCharPoly(MethodInapplicable):
    tag = "not-real-charpoly"

    def __init__(self, index, value=None):
        self.index = index
        self.value = value
        super().__init__(
            f"characteristic polynomial coefficient h_{index} is not real ({value})"
        )


class VanishingMinor(MethodInapplicable):
    """A leading principal minor of the Hankel matrix is exactly zero.

    `repeated_root` is True when the characteristic polynomial has a
    repeated root (typical at exceptional points), False when the zero
    minor is accidental, None when it was not determined.
    """

    tag = "vanishing-minor"

    def __init__(self, index, repeated_root=None, distinct_roots=None):
        self.index = index
        self.repeated_root = repeated_root
        self.distinct_roots = distinct_roots
        msg = f"leading principal minor d_{index} vanishes"
        if repeated_root:
            msg += f" (RepeatedRoot: {distinct_roots} distinct roots)"
        super().__init__(msg)


class NearDegenerate(MethodInapplicable):
    tag = "near-degenerate"

    def __init__(self, index, value=None, stage="minor"):
        self.index = index
        self.value = value
        self.stage = stage
        super().__init__(
            f"{stage} {index} lies inside the floating-point sign guard ({value!r})"
        )


class NoConvergence(RuntimeError):
    def __init__(self, iterations):
        self.iterations = iterations
        super().__init__(f"root finder did not converge in {iterations} iterations")


class ClassificationAmbiguous(RuntimeError):
    pass


class MatrixFileError(ValueError):
    """Malformed matrix file; message carries the position of the problem."""
