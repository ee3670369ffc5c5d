"""HIGHT: 128-bit key, 64-bit block, 32 byte-oriented ARX rounds.

Internally the state is eight bytes X0..X7 with X0 the least significant;
block and key bytes arrive most significant byte first and are reversed on
the way in and out.
"""

from __future__ import annotations

from . import BlockCipher


def _rol(x: int, n: int) -> int:
    return ((x << n) | (x >> (8 - n))) & 0xFF


F0 = tuple(_rol(x, 1) ^ _rol(x, 2) ^ _rol(x, 7) for x in range(256))
F1 = tuple(_rol(x, 3) ^ _rol(x, 4) ^ _rol(x, 6) for x in range(256))


def _deltas():
    s = [0, 1, 0, 1, 1, 0, 1]
    out = [0x5A]
    for i in range(1, 128):
        s.append(s[i + 2] ^ s[i - 1])
        out.append(sum(s[i + j] << j for j in range(7)))
    return out


_DELTA = _deltas()


class HIGHT(BlockCipher):
    name = "HIGHT"
    key_size = 128
    block_size = 64
    rounds = 32

    def _setup(self, key: bytes) -> None:
        mk = key[::-1]  # mk[0] = least significant key byte
        sk = [0] * 128
        for i in range(8):
            for j in range(8):
                sk[16 * i + j] = (mk[(j - i) % 8] + _DELTA[16 * i + j]) & 0xFF
                sk[16 * i + j + 8] = (mk[((j - i) % 8) + 8] + _DELTA[16 * i + j + 8]) & 0xFF
        self._sk = sk
        self._wk = (mk[12], mk[13], mk[14], mk[15], mk[0], mk[1], mk[2], mk[3])

    def encrypt_block(self, block: bytes) -> bytes:
        self._check_block(block)
        sk, wk = self._sk, self._wk
        p = block[::-1]
        x = [(p[0] + wk[0]) & 0xFF, p[1], p[2] ^ wk[1], p[3],
             (p[4] + wk[2]) & 0xFF, p[5], p[6] ^ wk[3], p[7]]
        for i in range(31):
            k = 4 * i
            x = [x[7] ^ ((F0[x[6]] + sk[k + 3]) & 0xFF),
                 x[0],
                 (x[1] + (F1[x[0]] ^ sk[k])) & 0xFF,
                 x[2],
                 x[3] ^ ((F0[x[2]] + sk[k + 1]) & 0xFF),
                 x[4],
                 (x[5] + (F1[x[4]] ^ sk[k + 2])) & 0xFF,
                 x[6]]
        k = 4 * 31  # final round leaves byte positions in place
        x = [x[0],
             (x[1] + (F1[x[0]] ^ sk[k])) & 0xFF,
             x[2],
             x[3] ^ ((F0[x[2]] + sk[k + 1]) & 0xFF),
             x[4],
             (x[5] + (F1[x[4]] ^ sk[k + 2])) & 0xFF,
             x[6],
             x[7] ^ ((F0[x[6]] + sk[k + 3]) & 0xFF)]
        c = bytes(((x[0] + wk[4]) & 0xFF, x[1], x[2] ^ wk[5], x[3],
                   (x[4] + wk[6]) & 0xFF, x[5], x[6] ^ wk[7], x[7]))
        return c[::-1]

    def decrypt_block(self, block: bytes) -> bytes:
        self._check_block(block)
        sk, wk = self._sk, self._wk
        cb = block[::-1]
        x = [(cb[0] - wk[4]) & 0xFF, cb[1], cb[2] ^ wk[5], cb[3],
             (cb[4] - wk[6]) & 0xFF, cb[5], cb[6] ^ wk[7], cb[7]]
        k = 4 * 31
        x = [x[0],
             (x[1] - (F1[x[0]] ^ sk[k])) & 0xFF,
             x[2],
             x[3] ^ ((F0[x[2]] + sk[k + 1]) & 0xFF),
             x[4],
             (x[5] - (F1[x[4]] ^ sk[k + 2])) & 0xFF,
             x[6],
             x[7] ^ ((F0[x[6]] + sk[k + 3]) & 0xFF)]
        for i in range(30, -1, -1):
            k = 4 * i
            x = [x[1],
                 (x[2] - (F1[x[1]] ^ sk[k])) & 0xFF,
                 x[3],
                 x[4] ^ ((F0[x[3]] + sk[k + 1]) & 0xFF),
                 x[5],
                 (x[6] - (F1[x[5]] ^ sk[k + 2])) & 0xFF,
                 x[7],
                 x[0] ^ ((F0[x[7]] + sk[k + 3]) & 0xFF)]
        p = bytes(((x[0] - wk[0]) & 0xFF, x[1], x[2] ^ wk[1], x[3],
                   (x[4] - wk[2]) & 0xFF, x[5], x[6] ^ wk[3], x[7]))
        return p[::-1]
