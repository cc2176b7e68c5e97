# jacobi/coefficients.py
from dataclasses import dataclass
from typing import Mapping

from errors import UsageError
from ring.scalar import Ring, Scalar, bind_scalar, is_nonnegative
from triangle.params import Params
from triangle.production import production_matrix


@dataclass(frozen=True)
class JacobiCF:
    """
    Coefficients of the J-fraction 1/(1 - s_0 t - r_1 t^2/(1 - s_1 t - ...)).

    `s` holds s_0..s_{L-1} and `r` holds r_1..r_L, so r[i] is r_{i+1}.
    L is the stored horizon.
    """

    s: tuple[Scalar, ...]
    r: tuple[Scalar, ...]
    ring: Ring

    def __post_init__(self):
        if len(self.r) != len(self.s):
            raise UsageError(f"Need as many r as s coefficients, got {len(self.r)} and {len(self.s)}")

    @property
    def horizon(self) -> int:
        return len(self.s)

    def s_at(self, n: int) -> Scalar:
        if n >= self.horizon:
            raise UsageError(f"s_{n} is beyond the stored horizon {self.horizon}")
        return self.s[n]

    def r_at(self, n: int) -> Scalar:
        """r_n for n >= 1."""
        if n < 1 or n > self.horizon:
            raise UsageError(f"r_{n} is outside the stored range 1..{self.horizon}")
        return self.r[n - 1]

    def bind(self, bindings: Mapping[str, object]) -> "JacobiCF":
        """Specialize indeterminates (typically q) in every coefficient."""
        ring = Ring(tuple(v for v in self.ring.vars if v not in bindings))
        s = tuple(ring.embed(bind_scalar(v, bindings)) for v in self.s)
        r = tuple(ring.embed(bind_scalar(v, bindings)) for v in self.r)
        return JacobiCF(s=s, r=r, ring=ring)


def _row_coefficients(params: Params, horizon: int, ring: Ring, p: Scalar) -> JacobiCF:
    a1, a2, b1, b2, _ = (ring.embed(v) for v in params.values())
    s = tuple(a2 + a1 * n + (b1 * (2 * n + 1) + b2) * p for n in range(horizon))
    r = tuple((b1 * (n + 1) + b2) * p * (b1 * p + a1) * (n + 1) for n in range(horizon))
    return JacobiCF(s=s, r=r, ring=ring)


def jacobi_coeffs_rows(params: Params, horizon: int, q=None) -> JacobiCF:
    """
    s_n = a2 + a1·n + [b1(2n+1) + b2](q+λ) and
    r_{n+1} = [b1(n+1) + b2](q+λ)[b1(q+λ) + a1](n+1).

    The coefficients live in the parameter ring extended by q; pass `q`
    to bind it to a rational right away.
    """
    ring = params.ring.extended("q")
    cf = _row_coefficients(params, horizon, ring, ring.gen("q") + ring.embed(params.lam))
    return cf.bind({"q": q}) if q is not None else cf


def jacobi_coeffs_col0(params: Params, horizon: int) -> JacobiCF:
    """The row coefficients with (q+λ) replaced by λ, in the parameter ring."""
    return _row_coefficients(params, horizon, params.ring, params.lam)


def column0_cf_from_production(params: Params, horizon: int) -> JacobiCF:
    """
    First-column fraction read off the production matrix:
    s_n is the diagonal and r_{n+1} = r^J_n · t^J_{n+1}.
    """
    j = production_matrix(params, horizon + 1)
    return JacobiCF(
        s=j.s[:horizon],
        r=tuple(j.r[n] * j.t[n + 1] for n in range(horizon)),
        ring=params.ring,
    )


@dataclass(frozen=True)
class MomentDecomposition:
    """s_n = a2 + u_n + v_n and r_{n+1} = u_{n+1}·v_n."""

    level: tuple[Scalar, ...]
    u: tuple[Scalar, ...]
    v: tuple[Scalar, ...]


def moment_decomposition(params: Params, horizon: int) -> MomentDecomposition:
    """u_n = n[a1 + b1(q+λ)], v_n = (n·b1 + b2 + b1)(q+λ), level weight a2, over the q-extended ring."""
    ring = params.ring.extended("q")
    a1, a2, b1, b2, lam = (ring.embed(v) for v in params.values())
    p = ring.gen("q") + lam
    return MomentDecomposition(
        level=tuple(a2 for _ in range(horizon + 1)),
        u=tuple((a1 + b1 * p) * n for n in range(horizon + 1)),
        v=tuple((b1 * n + b2 + b1) * p for n in range(horizon + 1)),
    )


def verify_moment_decomposition(params: Params, horizon: int) -> int | None:
    """First index n where the decomposition fails to reproduce s_n or r_{n+1}, else None."""
    cf = jacobi_coeffs_rows(params, horizon)
    parts = moment_decomposition(params, horizon)
    for n in range(horizon):
        if parts.level[n] + parts.u[n] + parts.v[n] != cf.s[n]:
            return n
        if parts.u[n + 1] * parts.v[n] != cf.r[n]:
            return n
    return None


def is_nonnegative_cf(cf: JacobiCF) -> bool:
    """Every s_n and r_n is nonnegative (coefficientwise when symbolic)."""
    return all(is_nonnegative(v) for v in cf.s + cf.r)
