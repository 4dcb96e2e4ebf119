"""Surface and orbifold signature types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class SurfaceClass:
    """A closed surface: orientable genus-g (handles) or non-orientable genus-g
    (cross-caps).  The sphere is orientable genus 0."""

    orientable: bool
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be >= 0")
        if not self.orientable and self.genus < 1:
            raise ValueError("a non-orientable surface needs genus >= 1")

    @property
    def euler_characteristic(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus
        return 2 - self.genus

    @property
    def euler_genus(self) -> int:
        """Cross-cap-equivalent genus: 2g for orientable, g for non-orientable."""
        return 2 - self.euler_characteristic

    def __str__(self) -> str:
        return f"{'orientable' if self.orientable else 'non-orientable'} genus {self.genus}"


@dataclass(frozen=True)
class OrbifoldSignature:
    """Quotient type of a closed surface under a finite cyclic symmetry group.

    ``genus`` counts handles when orientable and cross-caps otherwise,
    ``boundary`` is the number of boundary circles and ``branch_indices``
    the sorted multiset of branch-point indices (each >= 2).
    """

    orientable: bool
    genus: int
    boundary: int
    branch_indices: tuple[int, ...]

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary must be >= 0")
        if not self.orientable and self.genus < 1:
            raise ValueError("a non-orientable orbifold needs genus >= 1")
        if any(m < 2 for m in self.branch_indices):
            raise ValueError("branch indices must be >= 2")
        object.__setattr__(self, "branch_indices", tuple(sorted(self.branch_indices)))

    @property
    def underlying_chi(self) -> int:
        """Euler characteristic of the underlying compact surface."""
        base = 2 - 2 * self.genus if self.orientable else 2 - self.genus
        return base - self.boundary

    @property
    def euler_genus(self) -> int:
        """Cross-cap count of the underlying surface (2g if orientable)."""
        return 2 * self.genus if self.orientable else self.genus

    @property
    def is_closed(self) -> bool:
        return self.boundary == 0

    def sort_key(self):
        return (
            0 if self.orientable else 1,
            -self.underlying_chi,
            self.boundary,
            len(self.branch_indices),
            self.branch_indices,
        )

    def __str__(self) -> str:
        sign = "+" if self.orientable else "-"
        branches = ",".join(str(m) for m in self.branch_indices)
        return f"O({sign};g={self.genus};h={self.boundary};[{branches}])"
