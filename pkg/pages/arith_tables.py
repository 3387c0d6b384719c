import streamlit as st

from arith.class_numbers import class_number_table
from arith.cusps import t_fixed_count_h2
from arith.formulas import e3_h11, predicted_orbit_size
from arith.orbifold import orbifold_sets
from arith.quadrics import cusp_equation_shape
from utils.errors import OrigamiError

FAMILY_PARAMS = {
    "H2_A": ["n"],
    "H2_B": ["n"],
    "Zmiaikou_Alt": ["n"],
    "Zmiaikou_Sym": ["n"],
    "Duryev": ["d", "n", "epsilon"],
    "KappesMoller": ["d", "epsilon"],
}


def arith_tables():
    """
    Streamlit UI for the arithmetic side: class numbers, orbifold sets and size formulas
    """
    st.set_page_config(page_title="Arithmetic Tables", page_icon="🔢")
    st.title("🔢 Arithmetic Tables")

    tabs = st.tabs(["Class numbers", "Orbifold sets", "Orbit sizes", "Cusp counts"])

    with tabs[0]:
        limit = st.number_input("Largest |D|", min_value=3, max_value=2000, value=100, step=1)
        rows = [
            {"D": r.D, "h": r.h, "units": r.unit_count, "h reduced": str(r.h_reduced)}
            for r in class_number_table(int(limit))
        ]
        st.table(rows)

    with tabs[1]:
        col1, col2 = st.columns(2)
        with col1:
            kind = st.selectbox("Set", ["H3", "H2sq"])
        with col2:
            D = st.number_input("Discriminant D", min_value=1, value=17 if kind == "H3" else 36, step=1)
        try:
            result = orbifold_sets(int(D), kind)
            st.metric("Triples", result.count)
            st.table([{"a": a, "b": b, "c": c} for a, b, c in sorted(result.triples)])
        except OrigamiError as e:
            st.error(f"{type(e).__name__}: {e}")

    with tabs[2]:
        family = st.selectbox("Formula", list(FAMILY_PARAMS))
        params = {}
        for name in FAMILY_PARAMS[family]:
            if name == "epsilon":
                params[name] = st.radio("epsilon", [0, 1], horizontal=True)
            else:
                params[name] = int(st.number_input(name, min_value=1, value=7, step=1, key=f"{family}_{name}"))
        try:
            st.metric("Predicted orbit size", predicted_orbit_size(family, **params))
        except OrigamiError as e:
            st.error(f"{type(e).__name__}: {e}")

        st.write("### Order-three points, H(1,1)")
        col1, col2, col3 = st.columns(3)
        with col1:
            d = st.number_input("d", min_value=2, value=4, step=1)
        with col2:
            n = st.number_input("torsion n", min_value=1, value=1, step=1)
        with col3:
            epsilon = st.radio("spin", [0, 1], horizontal=True, key="e3_spin")
        st.metric("e3", str(e3_h11(int(d), int(n), epsilon)))

    with tabs[3]:
        col1, col2 = st.columns(2)
        with col1:
            n = st.number_input("Squares", min_value=3, max_value=40, value=5, step=1)
        with col2:
            width = st.number_input("Cusp width", min_value=1, value=1, step=1)
        if st.button("Count T-fixed origamis"):
            try:
                with st.spinner("Solving ellipse equations..."):
                    count = t_fixed_count_h2(int(n), int(width))
                st.metric("Origamis", count.count)
                st.write(count.by_label)
                for X, params in zip(count.witnesses, count.params):
                    st.code(f"{params}  {X}")
            except OrigamiError as e:
                st.error(f"{type(e).__name__}: {e}")

        st.write("### Cusp equation shape")
        col1, col2, col3 = st.columns(3)
        with col1:
            genus = st.number_input("genus", min_value=2, value=2, step=1)
        with col2:
            zeros = st.number_input("zeros", min_value=1, value=1, step=1)
        with col3:
            cylinders = st.number_input("cylinders", min_value=1, value=2, step=1)
        try:
            rank, free = cusp_equation_shape(int(genus), int(zeros), int(cylinders))
            st.write(f"quadric rank {rank}, {free} free saddle lengths")
        except OrigamiError as e:
            st.error(f"{type(e).__name__}: {e}")


if __name__ == "__main__":
    arith_tables()
