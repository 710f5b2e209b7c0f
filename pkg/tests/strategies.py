from hypothesis import strategies as st

from momentangle.complex import SimplicialComplex


@st.composite
def complexes(draw, max_vertices=6, first_label=1, max_facets=6):
    n = draw(st.integers(1, max_vertices))
    labels = list(range(first_label, first_label + n))
    facets = draw(
        st.lists(
            st.sets(st.sampled_from(labels), min_size=1, max_size=min(n, 4)),
            min_size=1,
            max_size=max_facets,
        )
    )
    return SimplicialComplex(facets)


def int_matrices(max_rows=4, max_cols=4, bound=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            )
        )
    )
