"""Block cipher implementations used by the measurement harness.

Every cipher follows its canonical published specification and is validated
against known-answer vectors in the test suite.  Blocks and keys are byte
strings, most significant byte first.  Instances schedule the key once at
construction and are immutable afterwards, so concurrent encrypt/decrypt
calls on one instance are safe.

Where the bundled dataset's algorithmic table disagrees with a canonical
specification (it lists XTEA with 96-bit and 3-WAY with 128-bit keys), the
executable implementations keep the canonical sizes: XTEA takes 128-bit
keys and 3-WAY takes 96-bit keys.

These implementations exist to be measured and classified; they provide no
modes of operation, padding, or side-channel hardening and must not be used
to protect data.
"""

from __future__ import annotations

from ..errors import UsageError


class BlockCipher:
    """Fixed-size block cipher with the key scheduled at construction."""

    name: str = ""
    key_size: int = 0      # bits
    block_size: int = 0    # bits
    rounds: int = 0

    def __init__(self, key: bytes):
        if len(key) != self.key_size // 8:
            raise UsageError(
                f"{self.name}: key must be {self.key_size // 8} bytes, "
                f"got {len(key)}")
        self._key = bytes(key)
        self._setup(self._key)

    def _setup(self, key: bytes) -> None:
        """Hook for key-schedule precomputation."""

    def _check_block(self, block: bytes) -> None:
        if len(block) != self.block_size // 8:
            raise UsageError(
                f"{self.name}: block must be {self.block_size // 8} bytes, "
                f"got {len(block)}")

    def encrypt_block(self, block: bytes) -> bytes:
        raise NotImplementedError

    def decrypt_block(self, block: bytes) -> bytes:
        raise NotImplementedError


def cipher_registry():
    """All implemented ciphers, in the canonical dataset row order."""
    from .aes import AES192
    from .hight import HIGHT
    from .katan import (KATAN32, KATAN48, KATAN64,
                        KTANTAN32, KTANTAN48, KTANTAN64)
    from .skipjack import Skipjack
    from .threeway import ThreeWay
    from .xtea import XTEA

    return (Skipjack, XTEA, ThreeWay, HIGHT,
            KATAN32, KATAN48, KATAN64,
            KTANTAN32, KTANTAN48, KTANTAN64, AES192)


def cipher_by_name(name: str):
    for cls in cipher_registry():
        if cls.name.lower() == name.lower():
            return cls
    known = ", ".join(c.name for c in cipher_registry())
    raise UsageError(f"unknown cipher {name!r}; known ciphers: {known}")
