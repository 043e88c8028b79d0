"""Ground-truth terrain: a square-cell grid of surface classes.

Each cell carries a grip coefficient (scales the lateral-acceleration limit
of the vehicle), a roughness value (drives vibration and body oscillation)
and a procedural texture. The grid is the hidden world state of the
simulator: controllers never read it directly, only through sensors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..rng import hash_u32

# Modulation depth of the procedural texture around the base color.
TEXTURE_AMPLITUDE = 0.08


class OutOfBoundsError(ValueError):
    """Query for a position outside the terrain map."""


@dataclass(frozen=True)
class TerrainCell:
    grip: float          # (0, 1], scales the yaw-slip limit
    roughness: float     # >= 0, unitless vibration intensity
    texture_seed: int
    base_color: tuple[float, float, float]  # RGB in [0, 1]

    def __post_init__(self):
        if not (0.0 < self.grip <= 1.0):
            raise ValueError(f"grip must be in (0, 1], got {self.grip}")
        if self.roughness < 0.0:
            raise ValueError(f"roughness must be >= 0, got {self.roughness}")


def _texture_params(seed: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Two plane-wave vectors and phases, fixed by the seed.

    Wavelengths sit in 0.7..1.4 m so the pattern stays resolvable from a
    few meters away at the default camera resolution.
    """
    def unit(h: int) -> float:
        return hash_u32(seed, h) / 2**32

    ks = []
    phases = []
    for i in (0, 1):
        wavelength = 0.7 + 0.7 * unit(10 + i)
        angle = 2.0 * np.pi * unit(20 + i)
        k = 2.0 * np.pi / wavelength
        ks.append((k * np.cos(angle), k * np.sin(angle)))
        phases.append(2.0 * np.pi * unit(30 + i))
    return np.asarray(ks[0]), np.asarray(ks[1]), np.asarray(phases)


def texture_modulation(xs: np.ndarray, ys: np.ndarray, seed: int) -> np.ndarray:
    """Smooth modulation field in [-1, 1], a pure function of (seed, position)."""
    k0, k1, ph = _texture_params(int(seed))
    a = np.sin(k0[0] * xs + k0[1] * ys + ph[0])
    b = np.sin(k1[0] * xs + k1[1] * ys + ph[1])
    return a * b


class TerrainMap:
    """Rectangular world of square cells, origin at (0, 0).

    Positions with 0 <= x < width and 0 <= y < height are inside; cell
    lookup outside raises OutOfBoundsError rather than clamping.
    """

    def __init__(
        self,
        cell_size: float,
        class_table: list[TerrainCell],
        class_grid: np.ndarray,
    ):
        if cell_size <= 0:
            raise ValueError("cell_size must be positive")
        grid = np.asarray(class_grid, dtype=np.int16)
        if grid.ndim != 2:
            raise ValueError("class_grid must be 2-D (rows=y, cols=x)")
        if grid.min() < 0 or grid.max() >= len(class_table):
            raise ValueError("class_grid references unknown class ids")
        self.cell_size = float(cell_size)
        self.classes = list(class_table)
        self.grid = grid
        self.rows, self.cols = grid.shape
        self.width = self.cols * self.cell_size
        self.height = self.rows * self.cell_size
        # Per-class lookup tables for vectorized sampling.
        self._grip = np.array([c.grip for c in self.classes])
        self._rough = np.array([c.roughness for c in self.classes])
        self._color = np.array([c.base_color for c in self.classes])
        self._seed = np.array([c.texture_seed for c in self.classes], dtype=np.int64)

    def in_bounds(self, x: float, y: float) -> bool:
        return 0.0 <= x < self.width and 0.0 <= y < self.height

    def _indices(self, x: float, y: float) -> tuple[int, int]:
        if not self.in_bounds(x, y):
            raise OutOfBoundsError(f"position ({x:.3f}, {y:.3f}) outside {self.width}x{self.height} m map")
        return int(y / self.cell_size), int(x / self.cell_size)

    def class_id_at(self, x: float, y: float) -> int:
        r, c = self._indices(x, y)
        return int(self.grid[r, c])

    def cell_at(self, x: float, y: float) -> TerrainCell:
        return self.classes[self.class_id_at(x, y)]

    def class_ids(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Vectorized class lookup; -1 for out-of-bounds positions."""
        xs = np.asarray(xs)
        ys = np.asarray(ys)
        inside = (xs >= 0) & (xs < self.width) & (ys >= 0) & (ys < self.height)
        cols = np.clip((xs / self.cell_size).astype(np.int64), 0, self.cols - 1)
        rows = np.clip((ys / self.cell_size).astype(np.int64), 0, self.rows - 1)
        ids = self.grid[rows, cols].astype(np.int64)
        return np.where(inside, ids, -1)

    def sample_colors(self, xs: np.ndarray, ys: np.ndarray, void_color=(0.25, 0.25, 0.28)) -> np.ndarray:
        """Textured ground color at world positions; void color outside the map.

        Render-path helper: repeatable for fixed seeds, vectorized over
        flat position arrays. Returns float32 (N, 3) in [0, 1].
        """
        xs = np.asarray(xs, dtype=np.float64).ravel()
        ys = np.asarray(ys, dtype=np.float64).ravel()
        ids = self.class_ids(xs, ys)
        out = np.empty((xs.size, 3), dtype=np.float32)
        out[:] = np.asarray(void_color, dtype=np.float32)
        for cid in np.unique(ids):
            if cid < 0:
                continue
            sel = ids == cid
            mod = texture_modulation(xs[sel], ys[sel], int(self._seed[cid]))
            rgb = self._color[cid][None, :] * (1.0 + TEXTURE_AMPLITUDE * mod[:, None])
            out[sel] = np.clip(rgb, 0.0, 1.0).astype(np.float32)
        return out
