"""Exception and warning types shared across the package."""


class GravWitnessError(Exception):
    """Base class for all errors raised by this package."""


class ConfigFieldError(GravWitnessError, ValueError):
    """An experiment-configuration field violates its invariant."""

    field = ""

    def __init__(self, value):
        self.value = value
        super().__init__(f"{self.field} = {value!r} violates {self.constraint}")


class NonPositiveMass(ConfigFieldError):
    field = "mass"
    constraint = "mass > 0 kg"


class NonPositiveSeparation(ConfigFieldError):
    field = "d_min"
    constraint = "d_min > 0 m"


class NegativeWidth(ConfigFieldError):
    field = "delta_x"
    constraint = "delta_x >= 0 m"


class NonPositiveTime(ConfigFieldError):
    field = "tau"
    constraint = "tau > 0 s"


class NegativeDecoherence(ConfigFieldError):
    field = "gamma"
    constraint = "gamma >= 0 Hz"


class UnitParseError(GravWitnessError, ValueError):
    """A quantity string could not be parsed, or its unit has the wrong dimension."""


class SubsystemOutOfRange(GravWitnessError, IndexError):
    """Partial transpose requested over a qubit index that does not exist."""


class NotHermitian(GravWitnessError, ValueError):
    """Matrix handed to the Hermitian eigensolver is not Hermitian within tolerance."""


class ConvergenceFailure(GravWitnessError, RuntimeError):
    """Jacobi sweeps hit the iteration cap before reaching the off-diagonal target."""


class WrongSignBranch(GravWitnessError, ValueError):
    """Closed-form witness called with a rate sum of the wrong sign for that layout."""


class ArcsinDomain(GravWitnessError, ValueError):
    """Width inversion produced an arcsine argument outside [-1, 1]."""

    def __init__(self, argument):
        self.argument = argument
        super().__init__(f"arcsin argument {argument!r} outside [-1, 1]")


class NoSolution(GravWitnessError, ValueError):
    """Width inversion produced a negative squared width: target unreachable."""

    def __init__(self, delta_x_squared):
        self.delta_x_squared = delta_x_squared
        super().__init__(
            f"no real width solves the target (delta_x^2 = {delta_x_squared!r} < 0)"
        )


class NoCrossing(GravWitnessError, RuntimeError):
    """The witness never reaches the target on the searched phase branch."""

    def __init__(self, target, min_witness, at_delta_x):
        self.target = target
        self.min_witness = min_witness
        self.at_delta_x = at_delta_x
        super().__init__(
            f"witness never reaches {target!r}; minimum achieved is "
            f"{min_witness!r} at delta_x = {at_delta_x!r} m"
        )


class ApproximationOutOfRegime(UserWarning):
    """Small-width rate estimate evaluated outside its validity regime."""


class DegenerateMinimum(UserWarning):
    """Two lowest partial-transpose eigenvalues coincide; the reported
    eigenvector is a deterministic but basis-dependent choice."""
