"""3-WAY: 96-bit key and block, 11 rounds over three 32-bit words.

The cipher is self-inverse up to the bit-reversal map mu and a related key,
so decryption runs the same round function with transformed key and round
constants.  Block bytes map big-endian onto words a0, a1, a2 in order.
"""

from __future__ import annotations

from . import BlockCipher

_M = 0xFFFFFFFF
_NMBR = 11
_STRT_E = 0x0B0B
_STRT_D = 0xB1B1


def _mu(a):
    """Reverse the bit order of the whole 96-bit state."""
    b = [0, 0, 0]
    a = list(a)
    for _ in range(32):
        for j in range(3):
            b[j] = (b[j] << 1) & _M
        if a[0] & 1:
            b[2] |= 1
        if a[1] & 1:
            b[1] |= 1
        if a[2] & 1:
            b[0] |= 1
        for j in range(3):
            a[j] >>= 1
    return b


def _gamma(a):
    return [a[0] ^ (a[1] | (~a[2] & _M)),
            a[1] ^ (a[2] | (~a[0] & _M)),
            a[2] ^ (a[0] | (~a[1] & _M))]


def _theta(a):
    a0, a1, a2 = a
    b0 = (a0 ^ (a0 >> 16) ^ ((a1 << 16) & _M) ^ (a1 >> 16) ^ ((a2 << 16) & _M)
          ^ (a1 >> 24) ^ ((a2 << 8) & _M) ^ (a2 >> 8) ^ ((a0 << 24) & _M)
          ^ (a2 >> 16) ^ ((a0 << 16) & _M) ^ (a2 >> 24) ^ ((a0 << 8) & _M))
    b1 = (a1 ^ (a1 >> 16) ^ ((a2 << 16) & _M) ^ (a2 >> 16) ^ ((a0 << 16) & _M)
          ^ (a2 >> 24) ^ ((a0 << 8) & _M) ^ (a0 >> 8) ^ ((a1 << 24) & _M)
          ^ (a0 >> 16) ^ ((a1 << 16) & _M) ^ (a0 >> 24) ^ ((a1 << 8) & _M))
    b2 = (a2 ^ (a2 >> 16) ^ ((a0 << 16) & _M) ^ (a0 >> 16) ^ ((a1 << 16) & _M)
          ^ (a0 >> 24) ^ ((a1 << 8) & _M) ^ (a1 >> 8) ^ ((a2 << 24) & _M)
          ^ (a1 >> 16) ^ ((a2 << 16) & _M) ^ (a1 >> 24) ^ ((a2 << 8) & _M))
    return [b0, b1, b2]


def _rho(a):
    a = _theta(a)
    a = [((a[0] >> 10) | (a[0] << 22)) & _M, a[1], ((a[2] << 1) | (a[2] >> 31)) & _M]
    a = _gamma(a)
    return [((a[0] << 1) | (a[0] >> 31)) & _M, a[1], ((a[2] >> 10) | (a[2] << 22)) & _M]


def _rcon(start):
    out = []
    s = start
    for _ in range(_NMBR + 1):
        out.append(s)
        s <<= 1
        if s & 0x10000:
            s ^= 0x11011
    return out


def _apply(a, k, rcon):
    a = list(a)
    for i in range(_NMBR):
        a = [a[0] ^ k[0] ^ ((rcon[i] << 16) & _M), a[1] ^ k[1], a[2] ^ k[2] ^ rcon[i]]
        a = _rho(a)
    a = [a[0] ^ k[0] ^ ((rcon[_NMBR] << 16) & _M), a[1] ^ k[1], a[2] ^ k[2] ^ rcon[_NMBR]]
    return _theta(a)


class ThreeWay(BlockCipher):
    name = "3-WAY"
    key_size = 96
    block_size = 96
    rounds = 11

    def _setup(self, key: bytes) -> None:
        self._k = [int.from_bytes(key[4 * i:4 * i + 4], "big") for i in range(3)]
        self._ki = _mu(_theta(self._k))
        self._rcon_e = _rcon(_STRT_E)
        self._rcon_d = _rcon(_STRT_D)

    @staticmethod
    def _words(block):
        return [int.from_bytes(block[4 * i:4 * i + 4], "big") for i in range(3)]

    @staticmethod
    def _bytes(words):
        return b"".join(w.to_bytes(4, "big") for w in words)

    def encrypt_block(self, block: bytes) -> bytes:
        self._check_block(block)
        return self._bytes(_apply(self._words(block), self._k, self._rcon_e))

    def decrypt_block(self, block: bytes) -> bytes:
        self._check_block(block)
        a = _mu(self._words(block))
        return self._bytes(_mu(_apply(a, self._ki, self._rcon_d)))

    # word-level hooks for the reference test vectors
    def encrypt_words(self, words):
        return _apply(list(words), self._k, self._rcon_e)

    def decrypt_words(self, words):
        return _mu(_apply(_mu(list(words)), self._ki, self._rcon_d))
