"""
Vectorised kernels over stacks of field elements, polynomials and matrices.

A field element is a length-d residue vector, so a stack of N elements is an int64 array of
shape (N, d), a stack of N monic degree-n polynomials stores its non-leading coefficients as
(N, n, d), and a stack of N n x n matrices is (N, n, n, d). Every kernel reduces mod p on exit.
"""

import numpy as np

from src.algebra.field import FieldSpec


def decode_digits(indices: np.ndarray, p: int, width: int) -> np.ndarray:
    """
    Base-p digits of each index, least significant first, shape (N, width)
    """
    indices = np.asarray(indices, dtype=np.int64)
    out = np.empty((indices.shape[0], width), dtype=np.int64)
    rest = indices.copy()
    for i in range(width):
        rest, out[:, i] = np.divmod(rest, p)
    return out


def encode_digits(digits: np.ndarray, p: int) -> np.ndarray:
    """
    Inverse of decode_digits on the last axis
    """
    weights = p ** np.arange(digits.shape[-1], dtype=np.int64)
    return (digits * weights).sum(axis=-1)


def field_mul(x: np.ndarray, y: np.ndarray, field: FieldSpec) -> np.ndarray:
    """
    Elementwise product of residue stacks of matching shape (..., d)
    """
    if field.d == 1:
        return (x * y) % field.p
    return np.einsum("...a,...b,abm->...m", x, y, field.mul_tensor) % field.p


def field_pow(x: np.ndarray, k: int, field: FieldSpec) -> np.ndarray:
    result = np.zeros_like(x)
    result[..., 0] = 1
    base = x.copy()
    while k:
        if k & 1:
            result = field_mul(result, base, field)
        k >>= 1
        if k:
            base = field_mul(base, base, field)
    return result


def field_inv(x: np.ndarray, field: FieldSpec) -> np.ndarray:
    """
    x^(q-2): the inverse on nonzero entries, zero on zero entries
    """
    return field_pow(x, field.q - 2, field)


def frobenius(x: np.ndarray, field: FieldSpec, k: int) -> np.ndarray:
    """
    x -> x^(p^k) applied to a residue stack
    """
    if field.d == 1:
        return x % field.p
    return (x @ field.frobenius_matrix(k).T) % field.p


def is_zero(x: np.ndarray) -> np.ndarray:
    return ~x.any(axis=-1)


def is_one(x: np.ndarray) -> np.ndarray:
    return (x[..., 1:] == 0).all(axis=-1) & (x[..., 0] == 1)


# ------------------------------
# POLYNOMIAL kernels
# ------------------------------

def decode_monic(indices: np.ndarray, field: FieldSpec, n: int) -> np.ndarray:
    """
    Non-leading coefficients of the monic polynomials with the given indices, shape (N, n, d)
    """
    return decode_digits(indices, field.p, n * field.d).reshape(-1, n, field.d)


def poly_mulmod(a: np.ndarray, b: np.ndarray, f: np.ndarray, field: FieldSpec) -> np.ndarray:
    """
    a * b mod f for stacks of residues of degree < n modulo monic f (non-leading part (N, n, d))
    """
    n = f.shape[1]
    prod = np.zeros((a.shape[0], 2 * n - 1, field.d), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            prod[:, i + j] += field_mul(a[:, i], b[:, j], field)
    prod %= field.p
    for top in range(2 * n - 2, n - 1, -1):
        lead = prod[:, top]
        for i in range(n):
            prod[:, top - n + i] -= field_mul(lead, f[:, i], field)
        prod %= field.p
    return prod[:, :n]


def t_power_mod_batch(f: np.ndarray, e: int, field: FieldSpec) -> np.ndarray:
    """
    t^e mod f for a stack of monic f
    """
    count, n = f.shape[0], f.shape[1]
    result = np.zeros((count, n, field.d), dtype=np.int64)
    result[:, 0, 0] = 1
    base = np.zeros_like(result)
    if n == 1:
        base[:, 0] = (-f[:, 0]) % field.p
    else:
        base[:, 1, 0] = 1
    while e:
        if e & 1:
            result = poly_mulmod(result, base, f, field)
        e >>= 1
        if e:
            base = poly_mulmod(base, base, f, field)
    return result


def is_one_poly(r: np.ndarray) -> np.ndarray:
    """
    Mask of residues equal to the constant 1
    """
    one = np.zeros(r.shape[1:], dtype=np.int64)
    one[0, 0] = 1
    return (r == one).all(axis=(1, 2))


def full_coefficients(f: np.ndarray) -> np.ndarray:
    """
    Append the leading 1 to non-leading coefficient stacks, shape (N, n + 1, d)
    """
    lead = np.zeros((f.shape[0], 1, f.shape[2]), dtype=np.int64)
    lead[:, 0, 0] = 1
    return np.concatenate([f, lead], axis=1)


def reciprocal_fixed(f: np.ndarray, field: FieldSpec) -> np.ndarray:
    """
    Mask of stacked monic f with f(0) != 0 and f(0)^-1 t^n f(1/t) = f
    """
    full = full_coefficients(f)
    const = full[:, 0]
    inv = field_inv(const, field)
    rev = field_mul(full[:, ::-1], np.broadcast_to(inv[:, None, :], full.shape), field)
    return ~is_zero(const) & (rev == full).all(axis=(1, 2))


def conjugate_fixed(f: np.ndarray, field: FieldSpec) -> np.ndarray:
    """
    Mask of stacked monic f over a tagged F_{q^2} with f(0) != 0 and f-bar = f
    """
    full = full_coefficients(f)
    bars = frobenius(full, field, field.base_degree)
    inv = field_inv(bars[:, 0], field)
    rev = field_mul(bars[:, ::-1], np.broadcast_to(inv[:, None, :], bars.shape), field)
    return ~is_zero(full[:, 0]) & (rev == full).all(axis=(1, 2))


# ------------------------------
# MATRIX kernels
# ------------------------------

def decode_matrices(indices: np.ndarray, field: FieldSpec, n: int) -> np.ndarray:
    """
    Matrices of M_n(q) from their row-major indices (entry (0, 0) least significant),
    shape (N, n, n, d)
    """
    return decode_digits(indices, field.p, n * n * field.d).reshape(-1, n, n, field.d)


def encode_matrices(mats: np.ndarray, field: FieldSpec) -> np.ndarray:
    return encode_digits(mats.reshape(mats.shape[0], -1), field.p)


def mat_mul(a: np.ndarray, b: np.ndarray, field: FieldSpec) -> np.ndarray:
    """
    Batched product of (..., n, n, d) stacks
    """
    if field.d == 1:
        return np.matmul(a[..., 0], b[..., 0])[..., None] % field.p
    return np.einsum("...ika,...kjb,abm->...ijm", a, b, field.mul_tensor) % field.p


def mat_identity(count: int, n: int, field: FieldSpec) -> np.ndarray:
    out = np.zeros((count, n, n, field.d), dtype=np.int64)
    out[:, np.arange(n), np.arange(n), 0] = 1
    return out


def mat_pow(a: np.ndarray, k: int, field: FieldSpec) -> np.ndarray:
    """
    Batched a^k for k >= 1
    """
    if k < 1:
        raise ValueError(f"exponent must be >= 1, got {k}")
    result = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else mat_mul(result, base, field)
        k >>= 1
        if k:
            base = mat_mul(base, base, field)
    return result


def mat_conj_transpose(a: np.ndarray, field: FieldSpec) -> np.ndarray:
    """
    Entrywise x -> x^q followed by transposition, for a tagged F_{q^2}
    """
    return np.swapaxes(frobenius(a, field, field.base_degree), -2, -3)


def mat_det(a: np.ndarray, field: FieldSpec) -> np.ndarray:
    """
    Batched determinant of small stacks by cofactor expansion along the first row
    """
    n = a.shape[-2]
    if n == 1:
        return a[..., 0, 0, :] % field.p
    total = np.zeros(a.shape[:-3] + (field.d,), dtype=np.int64)
    for j in range(n):
        keep = [c for c in range(n) if c != j]
        minor = a[..., 1:, keep, :]
        term = field_mul(a[..., 0, j, :], mat_det(minor, field), field)
        total = total + term if j % 2 == 0 else total - term
    return total % field.p
