"""Exact Walsh-Hadamard transforms, convolution, and t-fold spectra.

A Boolean function f is identified with the unit-norm phase function
F(x) = (-1)^{f(x)} / sqrt(2^n).  Its transform is

    Fhat(w) = 2^{-n} * sum_x (-1)^{w.x + f(x)},

always an integer multiple of 2^{-n}; this module keeps such spectra as
integer numerators over a power-of-two denominator so every identity can
be checked exactly.  The t-fold squared coefficient is the t-fold XOR
convolution of Fhat^2,

    [Fhat^(t)(w)]^2 = (1/2^n) * sum_x (-1)^{w.x} (F*F)(x)^t,

with (F*F) the autocorrelation; its integer numerator over 2^{n(t+1)} is
available exactly for zero tests at any n, t.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import backend
from .boolfn import BooleanFunction, make_function, signs

KINDS = ("signed-fourier", "autocorrelation", "tfold", "generic")

# int64 butterflies are exact while every intermediate stays below 2^63;
# beyond that the pure-Python big-integer path takes over.
_I64_SAFE_BITS = 62


class Spectrum:
    """A length-2^n vector of spectral values.

    ``kind`` is one of ``signed-fourier`` (Fhat), ``autocorrelation``
    (F*F), ``tfold`` (Fhat^(t), nonnegative), or ``generic`` (derived,
    e.g. a convolution of spectra).  When ``numerators`` is present the
    exact value at w is ``numerators[w] / 2^den_exp``; tfold spectra with
    t >= 2 are float-only because their entries are square roots.
    """

    __slots__ = ("kind", "n", "t", "numerators", "den_exp", "_values")

    def __init__(self, kind, n, numerators=None, den_exp=None, values=None, t=1):
        if kind not in KINDS:
            raise ValueError(f"unknown spectrum kind {kind!r}")
        self.kind = kind
        self.n = n
        self.t = t
        size = 1 << n
        if numerators is not None:
            if len(numerators) != size:
                raise ValueError(f"expected {size} values, got {len(numerators)}")
            if den_exp is None:
                raise ValueError("den_exp required with numerators")
            self.numerators = _freeze_nums(numerators)
            self.den_exp = den_exp
            if kind == "signed-fourier":
                # every numerator is a sum of 2^n terms of +-1
                parity = size & 1
                for v in self.numerators:
                    if (int(v) & 1) != parity:
                        raise ValueError(
                            "signed spectrum numerators must have the parity of 2^n"
                        )
            scale = math.ldexp(1.0, -den_exp)
            self._values = np.array([float(v) * scale for v in self.numerators])
        else:
            if values is None:
                raise ValueError("need numerators or values")
            self.numerators = None
            self.den_exp = None
            self._values = np.asarray(values, dtype=np.float64)
            if self._values.size != size:
                raise ValueError(f"expected {size} values, got {self._values.size}")
        self._values.setflags(write=False)

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def is_exact(self) -> bool:
        return self.numerators is not None

    def value_fractions(self) -> list[Fraction]:
        if not self.is_exact:
            raise ValueError(f"{self.kind} spectrum with t={self.t} is float-only")
        den = 1 << self.den_exp
        return [Fraction(int(v), den) for v in self.numerators]

    def rational_strings(self) -> list[str]:
        """Entries rendered as '<num>/2^<k>' (for the CSV dump)."""
        if not self.is_exact:
            raise ValueError(f"{self.kind} spectrum with t={self.t} is float-only")
        return [f"{int(v)}/2^{self.den_exp}" for v in self.numerators]

    def __repr__(self) -> str:
        return f"Spectrum(kind={self.kind!r}, n={self.n}, t={self.t})"


def _freeze_nums(nums):
    if isinstance(nums, np.ndarray) and nums.dtype == np.int64:
        out = np.ascontiguousarray(nums)
        out.setflags(write=False)
        return out
    return tuple(int(v) for v in nums)


def spectrum_from_rationals(kind, n, values, t=1) -> Spectrum:
    """Build an exact spectrum from dyadic rationals (Fraction or int)."""
    fracs = [Fraction(v) for v in values]
    den_exp = 0
    for fr in fracs:
        d = fr.denominator
        if d & (d - 1):
            raise ValueError(f"denominator of {fr} is not a power of two")
        den_exp = max(den_exp, d.bit_length() - 1)
    if kind in ("signed-fourier", "autocorrelation"):
        den_exp = max(den_exp, n)  # these kinds are multiples of 2^-n
    nums = [int(fr * (1 << den_exp)) for fr in fracs]
    return Spectrum(kind, n, numerators=nums, den_exp=den_exp, t=t)


# ---------------------------------------------------------------------------
# Integer transforms.
# ---------------------------------------------------------------------------


def _wht_ints(vec) -> list[int]:
    """Exact butterfly over Python integers (no overflow, any size)."""
    out = [int(v) for v in vec]
    size = len(out)
    h = 1
    while h < size:
        for i in range(0, size, 2 * h):
            for j in range(i, i + h):
                a = out[j]
                b = out[j + h]
                out[j] = a + b
                out[j + h] = a - b
        h *= 2
    return out


def _wht_exact(vec, max_bits: int):
    """Exact butterfly, int64 fast path when the bound max_bits allows."""
    if max_bits <= _I64_SAFE_BITS:
        arr = np.asarray(vec, dtype=np.int64)
        return backend.wht_rows_i64(arr[None, :])[0]
    return _wht_ints(vec)


def signed_numerators(f: BooleanFunction) -> np.ndarray:
    """u with u[w] = sum_x (-1)^{w.x + f(x)} = 2^n * Fhat(w); int64."""
    return backend.wht_rows_i64(signs(f)[None, :])[0]


def autocorr_numerators(f: BooleanFunction):
    """a with a[s] = 2^n * (F*F)(s) = sum_y (-1)^{f(y) + f(y XOR s)}."""
    u = signed_numerators(f)
    # T(u^2) = 2^n * a, values bounded by 2^{3n}
    if 3 * f.n <= _I64_SAFE_BITS:
        raw = backend.wht_rows_i64((u.astype(np.int64) ** 2)[None, :])[0]
        out = raw // (1 << f.n)
        if not np.array_equal(out * (1 << f.n), raw):
            raise AssertionError("autocorrelation numerators are not integral")
        return out
    raw = _wht_ints([int(v) ** 2 for v in u])
    size = 1 << f.n
    out = []
    for v in raw:
        q, r = divmod(v, size)
        if r:
            raise AssertionError("autocorrelation numerators are not integral")
        out.append(q)
    return out


def tfold_sq_numerators(f: BooleanFunction, t: int):
    """c with c[w] = 2^{n(t+1)} * [Fhat^(t)(w)]^2, exact integers.

    Used for exact zero tests of the t-fold spectrum; c[w] >= 0 always.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    a = autocorr_numerators(f)
    return _wht_exact([int(v) ** t for v in a], f.n * (t + 1))


# ---------------------------------------------------------------------------
# Spectrum operations.
# ---------------------------------------------------------------------------


def wht(f: BooleanFunction) -> Spectrum:
    """Exact signed Fourier spectrum of f."""
    return Spectrum("signed-fourier", f.n, numerators=signed_numerators(f), den_exp=f.n)


def inverse_wht(spec: Spectrum) -> BooleanFunction:
    """Invert a signed spectrum back to the Boolean function.

    The transform is self-inverse, so applying the butterfly to the
    numerators must reconstruct +-2^den_exp at every point; anything else
    means the input was not the transform of a Boolean function.
    """
    if not spec.is_exact:
        raise ValueError("inverse transform needs an exact signed spectrum")
    size = 1 << spec.n
    rec = _wht_exact(
        [int(v) for v in spec.numerators],
        max(int(abs(int(v))) for v in spec.numerators).bit_length() + spec.n + 1,
    )
    unit = 1 << spec.den_exp
    table = np.empty(size, dtype=np.uint8)
    for x in range(size):
        v = int(rec[x])
        if v == unit:
            table[x] = 0
        elif v == -unit:
            table[x] = 1
        else:
            raise ValueError(
                "not a Boolean-function spectrum: reconstructed phase "
                f"{v}/2^{spec.den_exp} at x={x} is not +-1"
            )
    return make_function(spec.n, table)


def autocorrelation(f: BooleanFunction) -> Spectrum:
    """Exact autocorrelation (F*F); (F*F)(0) = 1 for every f."""
    return Spectrum("autocorrelation", f.n, numerators=autocorr_numerators(f), den_exp=f.n)


def convolve(a: Spectrum, b: Spectrum) -> Spectrum:
    """XOR-group convolution (a*b)(x) = sum_y a(y) b(x XOR y).

    Computed through the transform route T(T(a) T(b)) / 2^n; exact when
    both inputs are exact.
    """
    if a.n != b.n:
        raise ValueError(f"size mismatch: n={a.n} vs n={b.n}")
    size = 1 << a.n
    if a.is_exact and b.is_exact:
        bits_a = max(int(abs(int(v))) for v in a.numerators).bit_length()
        bits_b = max(int(abs(int(v))) for v in b.numerators).bit_length()
        max_bits = bits_a + bits_b + 3 * a.n + 2
        ta = _wht_exact([int(v) for v in a.numerators], bits_a + a.n + 1)
        tb = _wht_exact([int(v) for v in b.numerators], bits_b + a.n + 1)
        if max_bits <= _I64_SAFE_BITS:
            raw = backend.wht_rows_i64((np.asarray(ta) * np.asarray(tb))[None, :])[0]
            nums = raw // size
            if not np.array_equal(nums * size, raw):
                raise AssertionError("convolution numerators are not integral")
        else:
            raw = _wht_ints([int(x) * int(y) for x, y in zip(ta, tb)])
            nums = []
            for v in raw:
                q, r = divmod(v, size)
                if r:
                    raise AssertionError("convolution numerators are not integral")
                nums.append(q)
        return Spectrum(
            "generic", a.n, numerators=nums, den_exp=a.den_exp + b.den_exp
        )
    ta = backend.wht_rows_f64(a.values[None, :])[0]
    tb = backend.wht_rows_f64(b.values[None, :])[0]
    vals = backend.wht_rows_f64((ta * tb)[None, :])[0] / size
    return Spectrum("generic", a.n, values=vals)


def tfold_values(f: BooleanFunction, t: int) -> np.ndarray:
    """Float t-fold coefficients Fhat^(t)(w) >= 0 via the transform route."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    size = 1 << f.n
    fhat = signed_numerators(f).astype(np.float64) / size
    ac = backend.wht_rows_f64((fhat * fhat)[None, :])[0]
    conv = backend.wht_rows_f64((ac**t)[None, :])[0] / size
    bad = conv.min()
    if bad < -1e-9:
        raise AssertionError(
            f"t-fold squared coefficient {bad} below -1e-9: transform inconsistency"
        )
    np.clip(conv, 0.0, None, out=conv)
    return np.sqrt(conv)


def tfold_spectrum(f: BooleanFunction, t: int) -> Spectrum:
    """The t-fold spectrum Fhat^(t); exact for t = 1, float64 for t >= 2."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if t == 1:
        nums = np.abs(signed_numerators(f))
        return Spectrum("tfold", f.n, numerators=nums, den_exp=f.n, t=1)
    return Spectrum("tfold", f.n, values=tfold_values(f, t), t=t)
