"""AES (FIPS-197), used with a 192-bit key as the reference cipher."""

from __future__ import annotations

from . import BlockCipher

SBOX = bytes.fromhex(
    "637c777bf26b6fc53001672bfed7ab76"
    "ca82c97dfa5947f0add4a2af9ca472c0"
    "b7fd9326363ff7cc34a5e5f171d83115"
    "04c723c31896059a071280e2eb27b275"
    "09832c1a1b6e5aa0523bd6b329e32f84"
    "53d100ed20fcb15b6acbbe394a4c58cf"
    "d0efaafb434d338545f9027f503c9fa8"
    "51a3408f929d38f5bcb6da2110fff3d2"
    "cd0c13ec5f974417c4a77e3d645d1973"
    "60814fdc222a908846eeb814de5e0bdb"
    "e0323a0a4906245cc2d3ac629195e479"
    "e7c8376d8dd54ea96c56f4ea657aae08"
    "ba78252e1ca6b4c6e8dd741f4bbd8b8a"
    "703eb5664803f60e613557b986c11d9e"
    "e1f8981169d98e949b1e87e9ce5528df"
    "8ca1890dbfe6426841992d0fb054bb16")

INV_SBOX = bytearray(256)
for _i, _v in enumerate(SBOX):
    INV_SBOX[_v] = _i
INV_SBOX = bytes(INV_SBOX)

RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)

# doubling table over GF(2^8) with the AES polynomial
XT = bytes(((x << 1) ^ 0x1B) & 0xFF if x & 0x80 else x << 1 for x in range(256))


def _mul(a: int, b: int) -> int:
    p = 0
    while b:
        if b & 1:
            p ^= a
        a = XT[a]
        b >>= 1
    return p


# multiplication tables for the InvMixColumns coefficients
MUL9 = bytes(_mul(x, 9) for x in range(256))
MUL11 = bytes(_mul(x, 11) for x in range(256))
MUL13 = bytes(_mul(x, 13) for x in range(256))
MUL14 = bytes(_mul(x, 14) for x in range(256))


def _expand_key(key: bytes):
    nk = len(key) // 4
    nr = nk + 6
    words = [list(key[4 * i:4 * i + 4]) for i in range(nk)]
    for i in range(nk, 4 * (nr + 1)):
        t = list(words[i - 1])
        if i % nk == 0:
            t = [SBOX[b] for b in t[1:] + t[:1]]
            t[0] ^= RCON[i // nk - 1]
        elif nk > 6 and i % nk == 4:
            t = [SBOX[b] for b in t]
        words.append([a ^ b for a, b in zip(words[i - nk], t)])
    # flatten into one 16-byte round key per round, column-major like the state
    round_keys = []
    for rnd in range(nr + 1):
        rk = []
        for c in range(4):
            rk.extend(words[4 * rnd + c])
        round_keys.append(rk)
    return round_keys, nr


class AES192(BlockCipher):
    name = "AES"
    key_size = 192
    block_size = 128
    rounds = 12

    def _setup(self, key: bytes) -> None:
        self._rk, self._nr = _expand_key(key)

    def encrypt_block(self, block: bytes) -> bytes:
        self._check_block(block)
        s = list(block)
        rk = self._rk
        s = [b ^ k for b, k in zip(s, rk[0])]
        for rnd in range(1, self._nr + 1):
            s = [SBOX[b] for b in s]
            # ShiftRows on column-major flat layout: byte (4c + r) holds row r
            s = [s[0], s[5], s[10], s[15],
                 s[4], s[9], s[14], s[3],
                 s[8], s[13], s[2], s[7],
                 s[12], s[1], s[6], s[11]]
            if rnd < self._nr:
                m = []
                for c in range(0, 16, 4):
                    a0, a1, a2, a3 = s[c:c + 4]
                    m += [XT[a0] ^ XT[a1] ^ a1 ^ a2 ^ a3,
                          a0 ^ XT[a1] ^ XT[a2] ^ a2 ^ a3,
                          a0 ^ a1 ^ XT[a2] ^ XT[a3] ^ a3,
                          XT[a0] ^ a0 ^ a1 ^ a2 ^ XT[a3]]
                s = m
            s = [b ^ k for b, k in zip(s, rk[rnd])]
        return bytes(s)

    def decrypt_block(self, block: bytes) -> bytes:
        self._check_block(block)
        s = list(block)
        rk = self._rk
        s = [b ^ k for b, k in zip(s, rk[self._nr])]
        for rnd in range(self._nr - 1, -1, -1):
            # inverse ShiftRows
            s = [s[0], s[13], s[10], s[7],
                 s[4], s[1], s[14], s[11],
                 s[8], s[5], s[2], s[15],
                 s[12], s[9], s[6], s[3]]
            s = [INV_SBOX[b] for b in s]
            s = [b ^ k for b, k in zip(s, rk[rnd])]
            if rnd > 0:
                m = []
                for c in range(0, 16, 4):
                    a0, a1, a2, a3 = s[c:c + 4]
                    m += [MUL14[a0] ^ MUL11[a1] ^ MUL13[a2] ^ MUL9[a3],
                          MUL9[a0] ^ MUL14[a1] ^ MUL11[a2] ^ MUL13[a3],
                          MUL13[a0] ^ MUL9[a1] ^ MUL14[a2] ^ MUL11[a3],
                          MUL11[a0] ^ MUL13[a1] ^ MUL9[a2] ^ MUL14[a3]]
                s = m
        return bytes(s)
