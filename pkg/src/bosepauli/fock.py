"""Dense complex linear algebra on a truncated bosonic Fock space.

Operators are plain complex numpy matrices with entry ``[m, n] = <m|O|n>``;
kets are complex vectors with component ``n = <n|psi>``. A :class:`FockSpace`
retains the number states ``|0> .. |dim-1>`` with a hard cutoff: the raising
operator maps the top level to the zero vector, so every operator is an
endomorphism of the same finite space. Matrices compose with the native numpy
operators (``@``, ``+``, scalar ``*``); only the operations that add physics
semantics get names here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FockSpace:
    """Truncated Fock space holding the number states ``|0> .. |dim-1>``."""

    dim: int

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 2:
            raise ValueError(f"a Fock space needs at least two levels, got dim={self.dim!r}")


def annihilator(space: FockSpace) -> np.ndarray:
    """Lowering operator with ``a|n> = sqrt(n)|n-1>`` and ``a|0> = 0``."""
    return np.diag(np.sqrt(np.arange(1, space.dim)), 1).astype(complex)


def creator(space: FockSpace) -> np.ndarray:
    """Raising operator, the adjoint of :func:`annihilator`.

    Truncation convention: the top level ``|dim-1>`` is sent to the zero
    vector instead of leaving the space.
    """
    return dagger(annihilator(space))


def number_operator(space: FockSpace) -> np.ndarray:
    """Number operator ``diag(0, 1, ..., dim-1)``."""
    return np.diag(np.arange(space.dim)).astype(complex)


def diagonal_from_function(space: FockSpace, g) -> np.ndarray:
    """Diagonal operator ``g(N)`` with entry ``[n, n] = g(n)``.

    ``g`` must return a finite real or complex value for every retained level.
    """
    values = np.array([g(n) for n in range(space.dim)], dtype=complex)
    if not np.all(np.isfinite(values.real) & np.isfinite(values.imag)):
        raise ValueError("diagonal function returned a non-finite value")
    return np.diag(values)


def dagger(op: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return op.conj().T


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a @ b - b @ a``."""
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``a @ b + b @ a``."""
    return a @ b + b @ a


def max_abs_norm(arr: np.ndarray) -> float:
    """Largest entrywise modulus, the residual statistic used throughout."""
    arr = np.asarray(arr)
    if arr.size == 0:
        return 0.0
    return float(np.max(np.abs(arr)))


def apply(op: np.ndarray, ket: np.ndarray) -> np.ndarray:
    """Matrix-vector action ``op|ket>``."""
    return op @ ket


def inner(bra: np.ndarray, ket: np.ndarray) -> complex:
    """Inner product ``<u|v>``, conjugate linear in the first argument."""
    return complex(np.vdot(bra, ket))


def fock_ket(space: FockSpace, n: int) -> np.ndarray:
    """Basis ket ``|n>``."""
    if not 0 <= n < space.dim:
        raise IndexError(f"level {n} outside 0..{space.dim - 1}")
    ket = np.zeros(space.dim, dtype=complex)
    ket[n] = 1.0
    return ket
