"""XTEA: 128-bit key, 64-bit block, 64 Feistel rounds (32 cycles)."""

from __future__ import annotations

from . import BlockCipher

_MASK = 0xFFFFFFFF
_DELTA = 0x9E3779B9
_CYCLES = 32


class XTEA(BlockCipher):
    name = "XTEA"
    key_size = 128
    block_size = 64
    rounds = 64

    def _setup(self, key: bytes) -> None:
        self._k = tuple(int.from_bytes(key[4 * i:4 * i + 4], "big") for i in range(4))

    def encrypt_block(self, block: bytes) -> bytes:
        self._check_block(block)
        v0 = int.from_bytes(block[:4], "big")
        v1 = int.from_bytes(block[4:], "big")
        k = self._k
        s = 0
        for _ in range(_CYCLES):
            v0 = (v0 + ((((v1 << 4) ^ (v1 >> 5)) + v1) ^ (s + k[s & 3]))) & _MASK
            s = (s + _DELTA) & _MASK
            v1 = (v1 + ((((v0 << 4) ^ (v0 >> 5)) + v0) ^ (s + k[(s >> 11) & 3]))) & _MASK
        return v0.to_bytes(4, "big") + v1.to_bytes(4, "big")

    def decrypt_block(self, block: bytes) -> bytes:
        self._check_block(block)
        v0 = int.from_bytes(block[:4], "big")
        v1 = int.from_bytes(block[4:], "big")
        k = self._k
        s = (_DELTA * _CYCLES) & _MASK
        for _ in range(_CYCLES):
            v1 = (v1 - ((((v0 << 4) ^ (v0 >> 5)) + v0) ^ (s + k[(s >> 11) & 3]))) & _MASK
            s = (s - _DELTA) & _MASK
            v0 = (v0 - ((((v1 << 4) ^ (v1 >> 5)) + v1) ^ (s + k[s & 3]))) & _MASK
        return v0.to_bytes(4, "big") + v1.to_bytes(4, "big")
