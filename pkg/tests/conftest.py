from fractions import Fraction

from hypothesis import strategies as st

from mzvkit.ncpoly import NcPoly

words = st.text(alphabet="xy", max_size=6)

coeffs = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=9),
)

polys = st.dictionaries(words, coeffs, max_size=4).map(NcPoly)

admissible_word_strs = st.one_of(
    st.just(""),
    st.text(alphabet="xy", max_size=4).map(lambda mid: "x" + mid + "y"),
)

admissible_polys = st.dictionaries(admissible_word_strs, coeffs, max_size=3).map(NcPoly)
