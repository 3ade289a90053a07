from enum import Enum


class Channel(Enum):
    # a: 1<->2 and 3<->4, gap |kappa - epsilon|
    A = "a"
    # b: 1<->3 and 2<->4, gap kappa + epsilon
    B = "b"
