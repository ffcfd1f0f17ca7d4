from hypothesis import strategies as st

from hilbfock.partitions import Partition


@st.composite
def partitions(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    parts, left = [], n
    while left:
        p = draw(st.integers(1, min(left, parts[-1] if parts else left)))
        parts.append(p)
        left -= p
    return Partition(parts)
