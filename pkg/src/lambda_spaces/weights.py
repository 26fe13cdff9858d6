"""Weight families Lambda = (lambda_n) and finitely supported sequences.

Everything downstream (norms, modulars, geometric constants) is built from
the weighted-average transform

    Lx(n) = (1/lambda_n) * sum_{k<=n} (lambda_k - lambda_{k-1}) |x_k|

with the convention lambda_{-1} = 0.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, IndexOutOfRangeError, InvalidWeightsError


@dataclass(frozen=True)
class TailGrowth:
    """Analytic lower bound lambda_n >= c * (n+1)**alpha for all n >= start."""

    c: float
    alpha: float
    start: int = 0

    def __post_init__(self):
        if self.c <= 0 or self.alpha <= 0 or self.start < 0:
            raise InvalidWeightsError("tail growth descriptor needs c, alpha > 0")


class LambdaWeights:
    """A strictly increasing positive weight family.

    Built-in families carry exact closed forms:
      cesaro      lambda_n = n + 1
      power(a)    lambda_n = (n+1)**a
      riesz(q)    lambda_n = q_0 + ... + q_n, optionally extended by a
                  constant q_tail beyond the given prefix
      custom      finitely many explicit values, optionally with a
                  TailGrowth lower bound
    """

    def __init__(self, kind, alpha=1.0, q=None, q_tail=None, values=None,
                 tail_bound=None):
        self.kind = kind
        self.alpha = float(alpha)
        self.q_tail = None if q_tail is None else float(q_tail)
        self.tail_bound = tail_bound
        self._memo = None
        if kind == "cesaro":
            self.alpha = 1.0
        elif kind == "power":
            if self.alpha <= 0:
                raise InvalidWeightsError("power family needs alpha > 0")
        elif kind == "riesz":
            qa = np.asarray(q, dtype=np.float64)
            if qa.ndim != 1 or qa.size == 0 or np.any(qa <= 0):
                raise InvalidWeightsError("riesz needs a nonempty positive q")
            if self.q_tail is not None and self.q_tail <= 0:
                raise InvalidWeightsError("q_tail must be positive")
            self.q = qa
            self._memo = np.cumsum(qa)
            if self.q_tail is None and tail_bound is None:
                warnings.warn(
                    "riesz weights without q_tail or tail bound: "
                    "lambda_{k+1}/lambda_k -> 1 cannot be verified and "
                    "infinite sums cannot be bracketed", stacklevel=2)
        elif kind == "custom":
            va = np.asarray(values, dtype=np.float64)
            if va.ndim != 1 or va.size == 0 or va[0] <= 0 or np.any(np.diff(va) <= 0):
                raise InvalidWeightsError(
                    "custom weights must be positive and strictly increasing")
            self._memo = va
            if tail_bound is None:
                warnings.warn(
                    "custom weights without a tail bound: tail sums cannot "
                    "be bracketed and the ratio condition is unverified",
                    stacklevel=2)
        else:
            raise InvalidWeightsError(f"unknown family {kind!r}")

    # ---- constructors -------------------------------------------------

    @classmethod
    def cesaro(cls):
        return cls("cesaro")

    @classmethod
    def power(cls, alpha):
        return cls("power", alpha=alpha)

    @classmethod
    def riesz(cls, q, q_tail=None, tail_bound=None):
        return cls("riesz", q=q, q_tail=q_tail, tail_bound=tail_bound)

    @classmethod
    def custom(cls, values, tail_bound=None):
        return cls("custom", values=values, tail_bound=tail_bound)

    @classmethod
    def from_config(cls, cfg):
        """Build from a key-value mapping, e.g. {'family': 'power', 'alpha': 1.5}."""
        fam = cfg.get("family")
        if fam == "cesaro":
            return cls.cesaro()
        if fam == "power":
            return cls.power(float(cfg["alpha"]))
        if fam == "riesz":
            return cls.riesz(cfg["q"], q_tail=cfg.get("q_tail"))
        if fam == "custom":
            return cls.custom(cfg["values"])
        raise InvalidWeightsError(f"unknown family {fam!r}")

    # ---- evaluation ---------------------------------------------------

    def lambda_at(self, n):
        if n < 0:
            raise DomainError("index must be nonnegative")
        if self.kind == "cesaro":
            return float(n + 1)
        if self.kind == "power":
            return float(n + 1) ** self.alpha
        if self.kind == "riesz":
            m = self._memo
            if n < m.size:
                return float(m[n])
            if self.q_tail is not None:
                return float(m[-1] + (n - m.size + 1) * self.q_tail)
            raise IndexOutOfRangeError(
                f"riesz weights defined up to n={m.size - 1}, asked for {n}")
        m = self._memo
        if n < m.size:
            return float(m[n])
        raise IndexOutOfRangeError(
            f"custom weights defined up to n={m.size - 1}, asked for {n}")

    def delta_at(self, n):
        """lambda_n - lambda_{n-1}; delta_0 = lambda_0.  Computed from the
        family law where one exists, to avoid cancellation."""
        if n < 0:
            raise DomainError("index must be nonnegative")
        if self.kind == "cesaro":
            return 1.0
        if self.kind == "power":
            if n == 0:
                return 1.0
            return float(n + 1) ** self.alpha - float(n) ** self.alpha
        if self.kind == "riesz":
            if n < self.q.size:
                return float(self.q[n])
            if self.q_tail is not None:
                return self.q_tail
            raise IndexOutOfRangeError(
                f"riesz weights defined up to n={self.q.size - 1}, asked for {n}")
        if n == 0:
            return self.lambda_at(0)
        return self.lambda_at(n) - self.lambda_at(n - 1)

    # ---- tail model ---------------------------------------------------

    def tail_model(self):
        """Closed-form description of lambda_n for large n, or None.

        Returns one of
          ('power', coeff, alpha, start)  lambda_n = coeff*(n+1)**alpha, n >= start
          ('affine', c0, c1, start)       lambda_n = c0 + c1*n,          n >= start
          ('lower_power', c, alpha, start, known_end)
                                          only lambda_n >= c*(n+1)**alpha known
        """
        if self.kind in ("cesaro", "power"):
            return ("power", 1.0, self.alpha, 0)
        if self.kind == "riesz" and self.q_tail is not None:
            nq = self.q.size
            # lambda_n = lambda_{nq-1} + (n - nq + 1) * q_tail for n >= nq - 1
            c1 = self.q_tail
            c0 = float(self._memo[-1]) - (nq - 1) * c1
            return ("affine", c0, c1, nq - 1)
        if self.tail_bound is not None:
            tb = self.tail_bound
            return ("lower_power", tb.c, tb.alpha, tb.start, self._memo.size)
        return None


class FiniteSequence:
    """A finitely supported real sequence stored sparsely.

    ``idx`` is a sorted int64 array of support indices, ``vals`` the matching
    nonzero values.  Immutable after construction.
    """

    __slots__ = ("idx", "vals")

    def __init__(self, idx, vals):
        idx = np.asarray(idx, dtype=np.int64)
        vals = np.asarray(vals, dtype=np.float64)
        if idx.size and np.any(idx < 0):
            raise DomainError("indices must be nonnegative")
        if vals.size and not np.all(np.isfinite(vals)):
            raise DomainError("values must be finite")
        keep = vals != 0.0
        idx, vals = idx[keep], vals[keep]
        order = np.argsort(idx, kind="stable")
        idx, vals = idx[order], vals[order]
        if idx.size and np.any(np.diff(idx) == 0):
            raise DomainError("duplicate indices")
        self.idx = idx
        self.vals = vals

    @classmethod
    def from_pairs(cls, pairs):
        if not pairs:
            return cls([], [])
        idx, vals = zip(*pairs)
        return cls(idx, vals)

    @classmethod
    def basis(cls, k, value=1.0):
        return cls([k], [value])

    @classmethod
    def zero(cls):
        return cls([], [])

    @property
    def is_zero(self):
        return self.idx.size == 0

    @property
    def max_support(self):
        if self.is_zero:
            raise DomainError("the zero sequence has no support")
        return int(self.idx[-1])

    def at(self, n):
        pos = np.searchsorted(self.idx, n)
        if pos < self.idx.size and self.idx[pos] == n:
            return float(self.vals[pos])
        return 0.0

    def scale(self, c):
        return FiniteSequence(self.idx.copy(), self.vals * c)

    def truncate(self, n0):
        """Keep entries with index <= n0."""
        keep = self.idx <= n0
        return FiniteSequence(self.idx[keep], self.vals[keep])

    def __add__(self, other):
        allidx = np.union1d(self.idx, other.idx)
        out = np.zeros(allidx.size)
        out[np.searchsorted(allidx, self.idx)] += self.vals
        out[np.searchsorted(allidx, other.idx)] += other.vals
        return FiniteSequence(allidx, out)

    def __eq__(self, other):
        return (isinstance(other, FiniteSequence)
                and np.array_equal(self.idx, other.idx)
                and np.array_equal(self.vals, other.vals))

    def __hash__(self):
        return hash((self.idx.tobytes(), self.vals.tobytes()))

    def __repr__(self):
        body = ", ".join(f"{i}:{v:g}" for i, v in zip(self.idx, self.vals))
        return f"FiniteSequence({{{body}}})"


def segments(x, w):
    """Piecewise description of the transform: Lx(n) = C_i / lambda_n for
    n in [s_i, s_{i+1}), plus the constant weighted sum S beyond max support.

    Returns (starts, cums) with starts the support indices and cums the
    running sums C_i = sum_{j<=i} delta_{s_j} |x_{s_j}|.
    """
    cums = np.empty(x.idx.size)
    run = 0.0
    for i, k in enumerate(x.idx):
        run += w.delta_at(int(k)) * abs(float(x.vals[i]))
        cums[i] = run
    return x.idx, cums


def weighted_sum(x, w):
    """S = sum_k delta_k |x_k| (the constant numerator beyond max support)."""
    if x.is_zero:
        return 0.0
    return float(segments(x, w)[1][-1])


def lambda_transform(x, w, n):
    """Lx(n) = (1/lambda_n) sum_{k<=n} delta_k |x_k|."""
    if n < 0:
        raise DomainError("index must be nonnegative")
    num = 0.0
    for i, k in enumerate(x.idx):
        if k > n:
            break
        num += w.delta_at(int(k)) * abs(float(x.vals[i]))
    return num / w.lambda_at(n)
