# toeplitz.py
# Toeplitz determinants: exact dense evaluation, the strong Szego limit for
# smooth symbols, the Fisher-Hartwig expansion for symbols with jumps and
# roots, and the two determinant asymptotics used by the spin chains (the
# scalar XX characteristic determinant and the 2x2 block form whose
# prefactor is a ratio of theta functions).
#
# Determinants grow like e^{c L}, so every asymptotic routine returns a
# ScaledValue (log magnitude, phase) instead of a bare complex.

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .chain import NuSpectrum, PhaseCase, _xx_coefficients
from .errors import CutError, DomainError, ProximityError, ResolutionError
from .special import EllipticModulus, log_barnes_g, log_barnes_g_pair, theta

__all__ = [
    "ScaledValue",
    "SpectralParameter",
    "FHSingularity",
    "SmoothSymbolFactorization",
    "fourier_coeffs",
    "xx_symbol_coeffs",
    "toeplitz_det_exact",
    "toeplitz_matrix",
    "szego_asymptotic",
    "fisher_hartwig_asymptotic",
    "xx_char_det_asymptotic",
    "xx_char_det_exact",
    "xy_widom_prefactor",
    "xy_block_det_asymptotic",
    "xy_block_det_exact",
]

_COEFF_TAIL_TOL = 1e-10
_LOG_TAIL_TOL = 1e-12


@dataclass(frozen=True)
class ScaledValue:
    """A nonzero complex number x stored as (ln|x|, arg x).

    Safe for values far beyond float range; log_abs = -inf encodes 0.
    """

    log_abs: float
    phase: float

    @property
    def value(self) -> complex:
        if self.log_abs == -math.inf:
            return 0.0 + 0.0j
        if self.log_abs > 709.0:
            return cmath.rect(math.inf, 0.0)
        return cmath.rect(math.exp(self.log_abs), self.phase)

    def ratio(self, other: "ScaledValue") -> complex:
        """self / other as an ordinary complex; intended for ratios near 1."""
        return cmath.exp(complex(self.log_abs - other.log_abs, self.phase - other.phase))


@dataclass(frozen=True)
class SpectralParameter:
    """Characteristic-polynomial variable lambda, kept off the cut [-1, 1]."""

    lam: complex

    def __post_init__(self) -> None:
        lam = complex(self.lam)
        if abs(lam.imag) < 1e-15 and -1.0 - 1e-15 <= lam.real <= 1.0 + 1e-15:
            raise CutError(f"lambda = {lam} lies on the spectral cut [-1, 1]")

    @property
    def beta(self) -> complex:
        """(1/2 pi i) Log((lambda+1)/(lambda-1)), principal branch.

        Off the cut the argument avoids the negative real axis, so
        |Re beta| < 1/2 always holds.
        """
        lam = complex(self.lam)
        return cmath.log((lam + 1.0) / (lam - 1.0)) / (2.0j * math.pi)


@dataclass(frozen=True)
class FHSingularity:
    """One Fisher-Hartwig singularity: position theta in [0, 2 pi), root
    exponent alpha (Re alpha > -1/2) and jump exponent beta."""

    theta: float
    alpha: complex
    beta: complex

    def __post_init__(self) -> None:
        if not (0.0 <= self.theta < 2.0 * math.pi):
            raise DomainError(f"singularity angle must lie in [0, 2 pi), got {self.theta}")
        if not (complex(self.alpha).real > -0.5):
            raise DomainError(
                f"root exponent needs Re alpha > -1/2, got alpha = {self.alpha}"
            )

    @property
    def z(self) -> complex:
        return cmath.exp(1j * self.theta)


def _fft_samples(symbol: Callable[[float], complex], n_grid: int) -> np.ndarray:
    thetas = 2.0 * math.pi * np.arange(n_grid) / n_grid
    return np.array([symbol(float(t)) for t in thetas], dtype=complex)


def fourier_coeffs(
    symbol: Callable[[float], complex],
    n: int,
    quad_points: int | None = None,
    smooth: bool = True,
) -> np.ndarray:
    """Fourier coefficients c_k = (1/2 pi) int_0^2pi symbol(t) e^{-ikt} dt for
    |k| <= n, returned as an array of length 2n+1 with c_k at index n+k.

    quad_points defaults to the smallest power of two >= max(4n, 256); it
    must be >= 4n.  For a symbol declared smooth, |c_{+-n}| > 1e-10 raises a
    resolution error since the grid then aliases unresolved structure.
    """
    if n < 1:
        raise DomainError(f"coefficient order must be >= 1, got {n}")
    if quad_points is None:
        quad_points = 256
        while quad_points < 4 * n:
            quad_points *= 2
    if quad_points < 4 * n:
        raise DomainError(f"quad_points = {quad_points} < 4 n = {4 * n}")
    vals = _fft_samples(symbol, quad_points)
    c = np.fft.fft(vals) / quad_points  # c[k] = c_k for k >= 0, c[-k] at the top
    out = np.empty(2 * n + 1, dtype=complex)
    for k in range(-n, n + 1):
        out[n + k] = c[k % quad_points]
    if smooth and max(abs(out[0]), abs(out[-1])) > _COEFF_TAIL_TOL:
        raise ResolutionError(
            f"coefficients at |k| = {n} still of size "
            f"{max(abs(out[0]), abs(out[-1])):.3e} > {_COEFF_TAIL_TOL:.0e}; "
            f"raise n or quad_points"
        )
    return out


def xx_symbol_coeffs(s: SpectralParameter, h: float, n: int) -> np.ndarray:
    """Fourier coefficients of lambda - g(theta) for the XX chain at field h,
    where g is the piecewise-constant sign symbol; layout as fourier_coeffs."""
    if not (abs(h) < 2.0):
        raise DomainError(f"XX symbol needs |h| < 2, got h = {h}")
    g = _xx_coefficients(h, n)
    out = np.zeros(2 * n + 1, dtype=complex)
    out[n] = s.lam - g[0]
    for k in range(1, n + 1):
        out[n + k] = -g[k]
        out[n - k] = -g[k]
    return out


def toeplitz_matrix(coeffs: np.ndarray, L: int) -> np.ndarray:
    """L x L Toeplitz matrix T[j, k] = c_{j-k} from a two-sided coefficient
    array (length 2n+1, c_k at index n+k, n >= L-1)."""
    coeffs = np.asarray(coeffs)
    if coeffs.ndim != 1 or coeffs.size % 2 != 1:
        raise DomainError("coefficient array must be one-dimensional with odd length")
    n = coeffs.size // 2
    if L < 1:
        raise DomainError(f"matrix size must be >= 1, got {L}")
    if n < L - 1:
        raise DomainError(f"need coefficients out to |k| = {L - 1}, have {n}")
    idx = np.arange(L)
    return coeffs[n + (idx[:, None] - idx[None, :])]


def toeplitz_det_exact(coeffs: np.ndarray, L: int) -> ScaledValue:
    """det T_L(c) by dense LU factorization.

    A numerically singular matrix yields log_abs = -inf together with a
    condition warning, not an exception.
    """
    t = toeplitz_matrix(coeffs, L)
    if np.max(np.abs(t.imag)) == 0.0:
        sign, logdet = np.linalg.slogdet(t.real)
    else:
        sign, logdet = np.linalg.slogdet(t)
    if sign == 0:
        warnings.warn("Toeplitz matrix numerically singular; reporting det = 0")
        return ScaledValue(-math.inf, 0.0)
    return ScaledValue(float(logdet), float(cmath.phase(complex(sign))))


# -----------------------------------------------------------------------------
# Smooth (Szego) part
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class SmoothSymbolFactorization:
    """Wiener-Hopf data of a smooth nonvanishing index-zero symbol phi.

    Vk holds the Fourier coefficients of log phi (length 2n+1, V_k at index
    n+k); bplus_coeffs / bminus_coeffs are the Taylor coefficients of the
    factors b+(z) = e^{sum_{k>=1} V_k z^k} and b-(z) = e^{sum_{k<=-1} V_k z^k}
    in z and 1/z respectively, normalized to b+(0) = b-(inf) = 1.
    """

    Vk: np.ndarray = field(repr=False)
    V0: complex
    bplus_coeffs: np.ndarray = field(repr=False)
    bminus_coeffs: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.Vk.size // 2

    @staticmethod
    def _series_exp(v: np.ndarray) -> np.ndarray:
        # exp of sum_{k>=1} v[k] z^k via b_m = (1/m) sum_{k=1}^{m} k v[k] b_{m-k}
        n = v.size - 1
        b = np.zeros(n + 1, dtype=complex)
        b[0] = 1.0
        for m in range(1, n + 1):
            b[m] = sum(k * v[k] * b[m - k] for k in range(1, m + 1)) / m
        return b

    @classmethod
    def from_symbol(
        cls,
        symbol: Callable[[float], complex],
        n: int = 64,
        quad_points: int | None = None,
        tail_tol: float = _LOG_TAIL_TOL,
    ) -> "SmoothSymbolFactorization":
        """Factorize from samples of phi.

        The symbol must not vanish on the circle and must have winding
        number zero; a nonzero index is a domain error (no Szego limit),
        and a log-coefficient tail above tail_tol at |k| = n is a
        resolution error.
        """
        if n < 1:
            raise DomainError(f"order must be >= 1, got {n}")
        if quad_points is None:
            quad_points = 256
            while quad_points < 4 * n:
                quad_points *= 2
        if quad_points < 4 * n:
            raise DomainError(f"quad_points = {quad_points} < 4 n = {4 * n}")
        vals = _fft_samples(symbol, quad_points)
        amin = np.min(np.abs(vals))
        if amin < 1e-13:
            raise DomainError(f"symbol vanishes on the unit circle (min |phi| = {amin:.3e})")
        ph = np.unwrap(np.angle(vals))
        winding = round((np.unwrap(np.append(ph, ph[0]))[-1] - ph[0]) / (2.0 * math.pi))
        if winding != 0:
            raise DomainError(
                f"symbol has index {winding} != 0; the smooth-limit form does not apply"
            )
        logs = np.log(np.abs(vals)) + 1j * ph
        vhat = np.fft.fft(logs) / quad_points
        vk = np.empty(2 * n + 1, dtype=complex)
        for k in range(-n, n + 1):
            vk[n + k] = vhat[k % quad_points]
        tail = max(abs(vk[0]), abs(vk[-1]))
        if tail > tail_tol:
            raise ResolutionError(
                f"log-symbol coefficients at |k| = {n} still {tail:.3e} > {tail_tol:.0e}"
            )
        vplus = np.concatenate(([0.0], vk[n + 1:]))
        vminus = np.concatenate(([0.0], vk[n - 1::-1]))
        return cls(
            Vk=vk,
            V0=complex(vk[n]),
            bplus_coeffs=cls._series_exp(vplus),
            bminus_coeffs=cls._series_exp(vminus),
        )

    @classmethod
    def constant(cls, V0: complex) -> "SmoothSymbolFactorization":
        """Factorization of the constant symbol e^{V0} (b+ = b- = 1)."""
        vk = np.zeros(3, dtype=complex)
        vk[1] = V0
        one = np.array([1.0 + 0.0j, 0.0j])
        return cls(Vk=vk, V0=complex(V0), bplus_coeffs=one, bminus_coeffs=one)

    def log_b_plus(self, z: complex) -> complex:
        """log b+(z) = sum_{k=1}^{n} V_k z^k (|z| <= 1)."""
        n = self.order
        total = 0.0 + 0.0j
        zp = 1.0 + 0.0j
        for k in range(1, n + 1):
            zp *= z
            total += self.Vk[n + k] * zp
        return total

    def log_b_minus(self, z: complex) -> complex:
        """log b-(z) = sum_{k=1}^{n} V_{-k} z^{-k} (|z| >= 1)."""
        n = self.order
        total = 0.0 + 0.0j
        zp = 1.0 + 0.0j
        w = 1.0 / z
        for k in range(1, n + 1):
            zp *= w
            total += self.Vk[n - k] * zp
        return total

    def szego_sum(self) -> complex:
        """sum_{k>=1} k V_k V_{-k}, the log of the smooth-limit constant."""
        n = self.order
        ks = np.arange(1, n + 1)
        return complex(np.sum(ks * self.Vk[n + 1:] * self.Vk[n - 1::-1]))


def szego_asymptotic(f: SmoothSymbolFactorization, L: int) -> ScaledValue:
    """Strong Szego limit: det T_L(phi) ~ exp(L V_0 + sum_{k>=1} k V_k V_{-k})."""
    if L < 1:
        raise DomainError(f"matrix size must be >= 1, got {L}")
    logd = L * f.V0 + f.szego_sum()
    return ScaledValue(float(logd.real), float(logd.imag))


# -----------------------------------------------------------------------------
# Fisher-Hartwig
# -----------------------------------------------------------------------------
def _near_nonpositive_int(x: complex) -> bool:
    if abs(x.imag) > 1e-12:
        return False
    r = round(x.real)
    return r <= -1 and abs(x.real - r) < 1e-12


def _validate_fh(sings: Sequence[FHSingularity]) -> None:
    thetas = [s.theta for s in sings]
    if len(set(thetas)) != len(thetas):
        raise DomainError("singularity angles must be distinct")
    for s in sings:
        for sgn in (+1, -1):
            if _near_nonpositive_int(complex(s.alpha) + sgn * complex(s.beta)):
                raise DomainError(
                    f"alpha {'+' if sgn > 0 else '-'} beta = "
                    f"{complex(s.alpha) + sgn * complex(s.beta)} hits a nonpositive "
                    f"integer at theta = {s.theta}: the expansion degenerates"
                )
    res = [complex(s.beta).real for s in sings]
    for j in range(len(res)):
        for k in range(j + 1, len(res)):
            if abs(res[j] - res[k]) >= 1.0:
                raise DomainError(
                    f"jump exponents with |Re beta_j - Re beta_k| = "
                    f"{abs(res[j] - res[k]):.6g} >= 1 are outside the standard regime"
                )


def fisher_hartwig_asymptotic(
    f: SmoothSymbolFactorization,
    sings: Sequence[FHSingularity],
    L: int,
) -> ScaledValue:
    """det T_L for a symbol with root/jump singularities:

    det T_L ~ E * L^{sum_j (alpha_j^2 - beta_j^2)} * e^{L V_0},

    E = exp(sum k V_k V_-k)
        * prod_j b+(z_j)^{-alpha_j + beta_j} b-(z_j)^{-alpha_j - beta_j}
        * prod_{j<k} |z_j - z_k|^{2(beta_j beta_k - alpha_j alpha_k)}
                      (z_k / (z_j e^{i pi}))^{alpha_j beta_k - alpha_k beta_j}
        * prod_j G(1+alpha_j+beta_j) G(1+alpha_j-beta_j) / G(1+2 alpha_j),

    with singularities ordered by angle.  An empty singularity list reduces
    to the smooth limit.
    """
    if L < 1:
        raise DomainError(f"matrix size must be >= 1, got {L}")
    sings = sorted(sings, key=lambda s: s.theta)
    _validate_fh(sings)

    logd = L * complex(f.V0) + f.szego_sum()
    for s in sings:
        a, b = complex(s.alpha), complex(s.beta)
        logd += (a * a - b * b) * math.log(L)
        logd += (-a + b) * f.log_b_plus(s.z) + (-a - b) * f.log_b_minus(s.z)
        logd += log_barnes_g(a + b) + log_barnes_g(a - b) - log_barnes_g(2.0 * a)
    for j in range(len(sings)):
        aj, bj, tj = complex(sings[j].alpha), complex(sings[j].beta), sings[j].theta
        for k in range(j + 1, len(sings)):
            ak, bk, tk = complex(sings[k].alpha), complex(sings[k].beta), sings[k].theta
            dist = abs(2.0 * math.sin((tk - tj) / 2.0))
            logd += 2.0 * (bj * bk - aj * ak) * math.log(dist)
            # z_k/(z_j e^{i pi}) = e^{i (t_k - t_j - pi)} with the exponent
            # already in (-pi, pi), so the principal log is i times it.
            logd += (aj * bk - ak * bj) * 1j * (tk - tj - math.pi)
    return ScaledValue(float(logd.real), float(logd.imag))


# -----------------------------------------------------------------------------
# XX characteristic determinant
# -----------------------------------------------------------------------------
def xx_char_det_asymptotic(s: SpectralParameter, h: float, L: int) -> ScaledValue:
    """Large-L characteristic determinant of the XX block correlation matrix:

    D_L(lambda) ~ (2 - 2 cos 2kF)^{-beta^2} [G(1+beta) G(1-beta)]^2
                  e^{L V_0} L^{-2 beta^2},
    V_0 = Log(lambda+1) - (kF/pi) Log((lambda+1)/(lambda-1)).
    """
    if not (abs(h) < 2.0):
        raise DomainError(f"XX chain needs |h| < 2, got h = {h}")
    if L < 1:
        raise DomainError(f"matrix size must be >= 1, got {L}")
    lam = complex(s.lam)
    kf = math.acos(abs(h) / 2.0)
    beta = s.beta
    v0 = cmath.log(lam + 1.0) - (kf / math.pi) * cmath.log((lam + 1.0) / (lam - 1.0))
    logd = (
        -beta * beta * math.log(2.0 - 2.0 * math.cos(2.0 * kf))
        + 2.0 * log_barnes_g_pair(beta)
        + L * v0
        - 2.0 * beta * beta * math.log(L)
    )
    return ScaledValue(float(logd.real), float(logd.imag))


def xx_char_det_exact(nus: NuSpectrum, s: SpectralParameter) -> ScaledValue:
    """D_L(lambda) = prod_m (lambda - nu_m) from the exact nu-spectrum."""
    lam = complex(s.lam)
    logd = sum(cmath.log(lam - float(nu)) for nu in nus.nus)
    return ScaledValue(float(logd.real), float(logd.imag))


# -----------------------------------------------------------------------------
# XY block determinant
# -----------------------------------------------------------------------------
def xy_widom_prefactor(beta: complex, e: EllipticModulus, case: PhaseCase) -> complex:
    """Theta-function prefactor
    theta3(beta + sigma tau/2) theta3(beta - sigma tau/2) / theta3(sigma tau/2)^2
    at tau = i tau0.  Vanishes exactly at the ladder points, flipping sign."""
    tau = 1j * e.tau0
    off = case.sigma * tau / 2.0
    num = theta(3, beta + off, tau) * theta(3, beta - off, tau)
    den = theta(3, off, tau) ** 2
    return num / den


def xy_block_det_asymptotic(
    s: SpectralParameter,
    e: EllipticModulus,
    case: PhaseCase,
    L: int,
    proximity_tol: float = 1e-3,
) -> ScaledValue:
    """Large-L determinant of the 2L x 2L XY block problem:

    D_L(lambda) ~ [theta-prefactor](beta(lambda)) * (1 - lambda^2)^L.

    Within proximity_tol of a prefactor zero lambda_m the expansion is
    unreliable (the true determinant crosses over to the next order), so
    such lambda are rejected; pass a smaller tolerance deliberately to
    probe the sign change.
    """
    if L < 1:
        raise DomainError(f"matrix size must be >= 1, got {L}")
    lam = complex(s.lam)
    if proximity_tol > 0.0 and abs(lam.imag) < proximity_tol:
        shift = (1 - case.sigma) / 2.0
        m = 0
        while True:
            node = math.tanh((m + shift) * math.pi * e.tau0)
            if abs(lam.real - node) < proximity_tol or abs(lam.real + node) < proximity_tol:
                raise ProximityError(
                    f"lambda = {lam} lies within {proximity_tol} of the prefactor "
                    f"zero at +-{node:.9g}; the leading-order form breaks down there"
                )
            if 1.0 - node < proximity_tol or m > 10 ** 4:
                break
            m += 1
    pref = xy_widom_prefactor(s.beta, e, case)
    if pref == 0:
        return ScaledValue(-math.inf, 0.0)
    logd = cmath.log(pref) + L * cmath.log(1.0 - lam * lam)
    return ScaledValue(float(logd.real), float(logd.imag))


def xy_block_det_exact(nus: NuSpectrum, s: SpectralParameter) -> ScaledValue:
    """D_L(lambda) = (-1)^L prod_m (lambda^2 - nu_m^2) from the exact
    (nonnegative) XY nu-spectrum."""
    lam = complex(s.lam)
    L = len(nus)
    logd = sum(cmath.log(lam * lam - float(nu) ** 2) for nu in nus.nus)
    return ScaledValue(float(logd.real), float(logd.imag + math.pi * (L % 2)))
