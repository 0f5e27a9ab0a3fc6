import dataclasses
import math
import typing

import numpy

Scalar = typing.Union[int, float, complex]
JetLike = typing.Union["Jet", Scalar]


def _as_coefficients(values: typing.Iterable[Scalar]) -> numpy.ndarray:
    return numpy.array(values, dtype=complex)


@dataclasses.dataclass(frozen=True, eq=False)
class Jet:
    """
    Truncated Taylor expansion of a function about a fixed expansion point.

    Coefficients are normalized, ``coefficients[k] = f^(k)(t0) / k!``, which keeps
    high derivatives of oscillatory data representable without factorial overflow.
    Arithmetic between jets truncates to the shorter operand since higher
    coefficients of the result are not determined by the inputs.
    """

    coefficients: numpy.ndarray

    #: Defer mixed arithmetic with numpy scalars to the jet operators.
    __array_ufunc__ = None

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _as_coefficients(self.coefficients))
        if self.coefficients.ndim != 1 or self.coefficients.size == 0:
            raise ValueError(
                "A jet requires a non-empty one-dimensional coefficient array."
            )

    @classmethod
    def constant(cls, value: Scalar, length: int) -> "Jet":
        """Jet of a function that does not vary about the expansion point."""
        coefficients = numpy.zeros(length, dtype=complex)
        coefficients[0] = value
        return cls(coefficients)

    @classmethod
    def variable(cls, value: Scalar, length: int) -> "Jet":
        """Jet of the expansion variable itself, evaluated at ``value``."""
        coefficients = numpy.zeros(length, dtype=complex)
        coefficients[0] = value
        if length > 1:
            coefficients[1] = 1.0
        return cls(coefficients)

    @classmethod
    def from_derivatives(cls, derivatives: typing.Sequence[Scalar]) -> "Jet":
        """Build a jet from plain derivative values f, f', f'', ..."""
        return cls(
            numpy.array(
                [d / math.factorial(k) for k, d in enumerate(derivatives)],
                dtype=complex,
            )
        )

    @property
    def length(self) -> int:
        """Number of determined Taylor coefficients."""
        return int(self.coefficients.size)

    @property
    def value(self) -> complex:
        """Function value at the expansion point."""
        return complex(self.coefficients[0])

    @property
    def real(self) -> "Jet":
        """Real part taken coefficient-wise."""
        return Jet(self.coefficients.real.astype(complex))

    def derivative_value(self, k: int) -> complex:
        """Return the k-th derivative at the expansion point."""
        if k >= self.length:
            raise ValueError(
                f"Derivative {k} requested from a jet holding"
                f" {self.length} coefficients."
            )
        return complex(self.coefficients[k]) * math.factorial(k)

    def derivatives(self, count: int = None) -> numpy.ndarray:
        """Plain derivative values f^(0..count-1) at the expansion point."""
        count = self.length if count is None else count
        return numpy.array([self.derivative_value(k) for k in range(count)])

    def derivative(self, times: int = 1) -> "Jet":
        """Jet of the derivative, one coefficient shorter per differentiation."""
        coefficients = self.coefficients
        for _ in range(times):
            if coefficients.size < 2:
                raise ValueError(
                    "Differentiating a jet with no remaining coefficients."
                )
            coefficients = coefficients[1:] * numpy.arange(1, coefficients.size)
        return Jet(coefficients)

    def integral(self, constant: Scalar) -> "Jet":
        """Jet of the antiderivative taking the given value at the expansion point."""
        coefficients = numpy.empty(self.length + 1, dtype=complex)
        coefficients[0] = constant
        coefficients[1:] = self.coefficients / numpy.arange(1, self.length + 1)
        return Jet(coefficients)

    def truncate(self, length: int) -> "Jet":
        """Keep only the first ``length`` coefficients."""
        return Jet(self.coefficients[: max(1, length)])

    def evaluate(self, offset: float) -> complex:
        """Sum the truncated expansion at a displacement from the expansion point."""
        return complex(numpy.polynomial.polynomial.polyval(offset, self.coefficients))

    def reciprocal(self) -> "Jet":
        """Jet of 1/f; requires a nonzero value at the expansion point."""
        a = self.coefficients
        if a[0] == 0:
            raise ZeroDivisionError(
                "Reciprocal of a jet vanishing at its expansion point."
            )
        b = numpy.zeros_like(a)
        b[0] = 1.0 / a[0]
        for k in range(1, a.size):
            b[k] = -numpy.dot(a[1 : k + 1], b[k - 1 :: -1][:k]) / a[0]
        return Jet(b)

    def power(self, exponent: int) -> "Jet":
        """Non-negative integer power by repeated multiplication."""
        result = Jet.constant(1.0, self.length)
        for _ in range(exponent):
            result = result * self
        return result

    def cos_sin(self) -> typing.Tuple["Jet", "Jet"]:
        """Jets of cos(f) and sin(f)."""
        u = self.coefficients
        n = u.size
        c = numpy.zeros(n, dtype=complex)
        s = numpy.zeros(n, dtype=complex)
        c[0] = numpy.cos(u[0])
        s[0] = numpy.sin(u[0])
        weighted = u * numpy.arange(n)
        for k in range(1, n):
            s[k] = numpy.dot(weighted[1 : k + 1], c[k - 1 :: -1][:k]) / k
            c[k] = -numpy.dot(weighted[1 : k + 1], s[k - 1 :: -1][:k]) / k
        return Jet(c), Jet(s)

    def compose_polynomial(self, polynomial: numpy.polynomial.Polynomial) -> "Jet":
        """Jet of p(f) for a power-basis polynomial p, by Horner's scheme."""
        result = Jet.constant(0.0, self.length)
        for coefficient in polynomial.coef[::-1]:
            result = result * self + coefficient
        return result

    def _coerce(self, other: JetLike) -> "Jet":
        if isinstance(other, Jet):
            return other
        return Jet.constant(other, self.length)

    def __add__(self, other: JetLike) -> "Jet":
        other = self._coerce(other)
        n = min(self.length, other.length)
        return Jet(self.coefficients[:n] + other.coefficients[:n])

    __radd__ = __add__

    def __neg__(self) -> "Jet":
        return Jet(-self.coefficients)

    def __sub__(self, other: JetLike) -> "Jet":
        return self + (-self._coerce(other))

    def __rsub__(self, other: JetLike) -> "Jet":
        return self._coerce(other) - self

    def __mul__(self, other: JetLike) -> "Jet":
        if not isinstance(other, Jet):
            return Jet(self.coefficients * other)
        n = min(self.length, other.length)
        return Jet(numpy.convolve(self.coefficients[:n], other.coefficients[:n])[:n])

    __rmul__ = __mul__

    def __truediv__(self, other: JetLike) -> "Jet":
        if not isinstance(other, Jet):
            return Jet(self.coefficients / other)
        return self * other.reciprocal()

    def __rtruediv__(self, other: JetLike) -> "Jet":
        return self._coerce(other) * self.reciprocal()

    def __repr__(self) -> str:
        return f"Jet(value={self.value:.6g}, length={self.length})"


@dataclasses.dataclass(frozen=True)
class TrigPair:
    """
    Harmonic quantity ``cos_amp * cos(phase) + sin_amp * sin(phase)``.

    Amplitudes are complex floats for numerical data or exact sympy numbers for the
    rational time-jump tables; both support every operation here.
    """

    cos_amp: typing.Any = 0
    sin_amp: typing.Any = 0

    @property
    def numeric(self) -> "TrigPair":
        """Same pair with amplitudes converted to complex floats."""
        return TrigPair(complex(self.cos_amp), complex(self.sin_amp))

    def evaluate(self, phase: float) -> complex:
        """Value of the pair at the given trigonometric argument."""
        return complex(self.cos_amp) * numpy.cos(phase) + complex(
            self.sin_amp
        ) * numpy.sin(phase)

    def derivative(self, times: int = 1) -> "TrigPair":
        """Derivative with respect to the trigonometric argument."""
        pair = self
        for _ in range(times % 4):
            pair = TrigPair(pair.sin_amp, -pair.cos_amp)
        return pair

    def to_jet(self, phase: Jet) -> Jet:
        """Compose with a phase jet to obtain the jet of this pair along that phase."""
        cosine, sine = phase.cos_sin()
        return cosine * complex(self.cos_amp) + sine * complex(self.sin_amp)

    def __add__(self, other: "TrigPair") -> "TrigPair":
        return TrigPair(self.cos_amp + other.cos_amp, self.sin_amp + other.sin_amp)

    def __sub__(self, other: "TrigPair") -> "TrigPair":
        return TrigPair(self.cos_amp - other.cos_amp, self.sin_amp - other.sin_amp)

    def __neg__(self) -> "TrigPair":
        return TrigPair(-self.cos_amp, -self.sin_amp)

    def __mul__(self, factor: typing.Any) -> "TrigPair":
        return TrigPair(self.cos_amp * factor, self.sin_amp * factor)

    __rmul__ = __mul__

    def to_dict(self) -> typing.Dict[str, typing.Any]:
        """Convert to a dictionary representation that is JSON serializable for logs."""
        return {"cos": str(self.cos_amp), "sin": str(self.sin_amp)}


@dataclasses.dataclass(frozen=True)
class JumpSeries:
    """
    Spatial jumps J_0..J_M of a field across the particle about a single instant.

    Each entry is a jet in tau about ``tau`` so that every total time derivative of
    J_m(tau) needed by the g vectors is available exactly.
    """

    tau: float
    entries: typing.Tuple[Jet, ...]

    @property
    def m_max(self) -> int:
        """Highest jump index, the jump truncation M."""
        return len(self.entries) - 1

    def values(self) -> numpy.ndarray:
        """Jump values J_m(tau) for m = 0..M."""
        return numpy.array([e.value for e in self.entries])

    def time_derivatives(self, k: int) -> numpy.ndarray:
        """k-th total time derivatives of every J_m at tau."""
        return numpy.array([e.derivative_value(k) for e in self.entries])

    @classmethod
    def zeros(cls, tau: float, m_max: int, length: int) -> "JumpSeries":
        """Series of vanishing jumps."""
        return cls(tau, tuple(Jet.constant(0.0, length) for _ in range(m_max + 1)))
