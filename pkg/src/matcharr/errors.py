"""Exception types shared across the package."""


class LimitExceeded(ValueError):
    """An input exceeds a desk-scale guard (edge count, dimension, ...).

    Every guarded operation takes a keyword argument to raise its limit.
    """

    def __init__(self, what, value, limit):
        super().__init__(f"{what} = {value} exceeds limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit


def check_limit(what, value, limit):
    if limit is not None and value > limit:
        raise LimitExceeded(what, value, limit)
