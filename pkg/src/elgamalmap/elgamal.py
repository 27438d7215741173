"""The exponentiation map x -> g**x mod p as an explicit permutation of
{1, ..., p-1}, plus a minimal ElGamal signature sign/verify pair built
from the same arithmetic.

The permutation uses exponents taken literally in {1, ..., p-1}, so
x = p-1 maps to g**(p-1) = 1.  Messages and keys in the signature scheme
are raw residues mod p-1; there is no hashing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .numth import GroupParams, mod_inverse, mod_pow

__all__ = ["Permutation", "Signature", "elgamal_permutation", "sign", "verify"]


@dataclass(frozen=True)
class Permutation:
    """An explicit bijection on {1, ..., n} stored as an image table.

    `image[i-1]` is the image of element i.  Construction verifies the
    bijection property.
    """

    n: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.image) != self.n:
            raise ValueError(f"image table must have length n = {self.n}")
        if sorted(self.image) != list(range(1, self.n + 1)):
            raise ValueError("image is not a bijection on {1..n}")

    def image_of(self, i: int) -> int:
        """Image of element i, 1 <= i <= n."""
        return self.image[i - 1]


def elgamal_permutation(params: GroupParams) -> Permutation:
    """The permutation x -> g**x mod p of {1, ..., p-1}.

    Each entry is one modular multiplication from the previous, so the
    whole table costs p-2 multiplications.
    """
    p, g = params.p, params.g
    image = []
    acc = 1
    for _ in range(1, p):
        acc = acc * g % p
        image.append(acc)
    return Permutation(p - 1, tuple(image))


@dataclass(frozen=True)
class Signature:
    """A signature (K, b): the public session key K = g**k in [1, p-1]
    and the residue b in [0, p-2]."""

    K: int
    b: int


def sign(params: GroupParams, secret_a: int, session_k: int, message_m: int) -> Signature:
    """Sign message_m with global key secret_a and session key session_k.

    K = g**k mod p and b = k^(-1) * (m - a*K) mod (p-1), where K is read
    as an integer in [1, p-1] inside the exponent arithmetic.

    Raises:
        ValueError: if session_k is not invertible mod p-1.
    """
    p, g, d = params.p, params.g, params.d
    if gcd(session_k % d, d) != 1:
        raise ValueError(f"session key {session_k} is not invertible mod {d}")
    K = mod_pow(g, session_k % d, p)
    k_inv = mod_inverse(session_k, d)
    b = k_inv * (message_m - secret_a * K) % d
    return Signature(K, b)


def verify(params: GroupParams, public_A: int, message_m: int, sig: Signature) -> bool:
    """Check the verification identity g**m == A**K * K**b (mod p).

    For an honest signature, m = a*K + k*b (mod p-1), so both sides equal
    g**m.
    """
    p, g = params.p, params.g
    lhs = mod_pow(g, message_m % params.d, p)
    rhs = mod_pow(public_A, sig.K, p) * mod_pow(sig.K, sig.b, p) % p
    return lhs == rhs
