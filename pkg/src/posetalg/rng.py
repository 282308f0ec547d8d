"""Deterministic random source for corpora and scrambles.

A fixed 64-bit linear congruential generator, not the stdlib random module:
seeded corpora must come out bit-identical in any reimplementation, so the
update rule is part of the contract.

    state_{t+1} = (6364136223846793005 * state_t + 1442695040888963407) mod 2^64

The seed is masked to 64 bits and the generator is stepped once before the
first output.  Derived draws are defined exactly as:

    next_u64()        step, return state
    next_below(n)     next_u64() mod n
    next_is_below(p)  (next_u64() >> 11) < floor(p * 2^53), for 0 <= p <= 1
    shuffle(xs)       Fisher-Yates, descending i, j = next_below(i + 1)
"""

_MASK = (1 << 64) - 1
_MUL = 6364136223846793005
_INC = 1442695040888963407


class LCG:
    def __init__(self, seed):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (_MUL * self.state + _INC) & _MASK
        return self.state

    def next_below(self, n):
        if n <= 0:
            raise ValueError("next_below needs a positive bound")
        return self.next_u64() % n

    def next_is_below(self, p):
        # 53-bit threshold comparison; float rounding of p is part of the contract
        threshold = int(p * (1 << 53))
        return (self.next_u64() >> 11) < threshold

    def shuffle(self, xs):
        for i in range(len(xs) - 1, 0, -1):
            j = self.next_below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]

    def choice(self, xs):
        return xs[self.next_below(len(xs))]
