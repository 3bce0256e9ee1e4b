"""End cohomology of symmetric powers of punctured surfaces.

Two independent evaluations are provided.  :func:`end_cohomology_closed` is
the binomial closed form.  :func:`end_cohomology_pipeline` rebuilds the same
ranks from the exact sequence of the pair (SP^n(M_g), F_n u K), splitting the
kernel of alpha + beta with the kernel-sum identity and plugging in the
kernel, image and intersection ranks from :mod:`sparr.sp_tables`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .sp_tables import binom, im_cap, ker_im_beta, phi


@dataclass(frozen=True)
class EndCohomologyTable:
    g: int
    k: int
    n: int
    ranks: tuple[int, ...]  # ranks[p] for p = 0 .. 2n

    def __getitem__(self, p: int) -> int:
        return self.ranks[p] if 0 <= p < len(self.ranks) else 0

    @property
    def pipeline_determined_degree(self) -> int:
        """The degree p = n + 1, which the binomial closed form leaves to the pipeline."""
        return self.n + 1


@dataclass(frozen=True)
class DistinguishReport:
    g: int
    k: int
    g2: int
    k2: int
    n: int
    homotopy_equivalent: bool
    first: EndCohomologyTable
    second: EndCohomologyTable
    distinguishable: bool

    @property
    def differing_degrees(self) -> tuple[int, ...]:
        return tuple(p for p in range(2 * self.n + 1) if self.first[p] != self.second[p])


def _validate(g: int, k: int, n: int) -> None:
    if g < 0:
        raise ValidationError(f"genus must be >= 0, got {g}")
    if k < 1:
        raise ValidationError(f"need k >= 1 punctures for an end structure, got k={k}")
    if n < 1:
        raise ValidationError(f"symmetric power must be >= 1, got n={n}")


def end_cohomology_closed(g: int, k: int, n: int) -> EndCohomologyTable:
    _validate(g, k, n)
    N = 2 * g + k - 1
    middle = binom(2 * g + k, n) - binom(2 * g, n)
    ranks = []
    for p in range(2 * n + 1):
        if p <= n - 2:
            ranks.append(binom(N, p))
        elif p in (n - 1, n):
            ranks.append(middle)
        else:
            # p >= n + 2, extended down to p = n + 1
            ranks.append(binom(N, 2 * n - 1 - p))
    return EndCohomologyTable(g, k, n, tuple(ranks))


def relative_ranks(g: int, k: int, n: int) -> tuple[int, ...]:
    """Ranks of H_d(SP^n(M_g), F_n u K) for d = 0 .. 2n, via the kernel-sum identity.

    With Lambda_d = alpha_d + beta_d the rank is |Ker Lambda_{d-1}| + |Coker Lambda_d|, and
    |Ker(alpha + beta)| = |Ker alpha| + |Ker beta| + |Im alpha n Im beta|.  The alpha-only
    terms collapse to phi through the long exact sequence of (SP^n(M_g), F_n).
    """
    _validate(g, k, n)
    out = []
    for d in range(2 * n + 1):
        ker_prev, _ = ker_im_beta(g, k, n, d - 1)
        _, im_d = ker_im_beta(g, k, n, d)
        out.append(phi(g, k, n, d) + ker_prev + im_cap(g, k, n, d - 1) - im_d + im_cap(g, k, n, d))
    return tuple(out)


def end_cohomology_pipeline(g: int, k: int, n: int) -> EndCohomologyTable:
    delta = relative_ranks(g, k, n)
    return EndCohomologyTable(g, k, n, tuple(delta[2 * n - p] for p in range(2 * n + 1)))


def distinguish(g: int, k: int, g2: int, k2: int, n: int) -> DistinguishReport:
    """Compare the end cohomology of SP^n(M_{g,k}) and SP^n(M_{g2,k2}).

    A difference in any degree proves the two are not homeomorphic; equal
    tables prove nothing either way.
    """
    first = end_cohomology_closed(g, k, n)
    second = end_cohomology_closed(g2, k2, n)
    return DistinguishReport(
        g, k, g2, k2, n,
        homotopy_equivalent=(2 * g + k == 2 * g2 + k2),
        first=first,
        second=second,
        distinguishable=first.ranks != second.ranks,
    )
