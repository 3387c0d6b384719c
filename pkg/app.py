import streamlit as st
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

from orbits import create_report
from orbits.census import cycle_census, genus_lower_bound
from surfaces.origami import hlk_invariant, monodromy_class, stratum_and_genus
from utils.cache import cached_orbit
from utils.config import RunConfig
from utils.errors import OrigamiError
from utils.export import census_to_csv, dumps, export_graph, orbit_to_csv
from utils.parsing import parse_seed

st.set_page_config(page_title="Origami Orbit Explorer", page_icon="🟦", layout="wide")

EXAMPLE_SEEDS = {
    "Three squares": "((2,3),(1,2,3))",
    "Five squares, A orbit": "(1,1,0,2,2,0)",
    "Five squares, B orbit": "(1,1,0,2,2,1)",
    "Seven squares, H(1,1)": "((1,2,3,4,5,6,7),(1,3))",
}


def main():
    st.title("🟦 Origami Orbit Explorer")

    if "orbit" not in st.session_state:
        st.session_state.orbit = None

    config = RunConfig()

    with st.sidebar:
        st.write("### Orbit")
        example = st.selectbox("Example seed", ["(custom)"] + list(EXAMPLE_SEEDS))
        default = EXAMPLE_SEEDS.get(example, "((2,3),(1,2,3))")
        seed_text = st.text_input("Seed origami or H(2) parameters", value=default)
        generators = st.radio("Generators", ["parabolic", "elliptic"], horizontal=True)
        use_cache = st.checkbox("Use orbit cache", value=True, help=config.cache_dir)

        if st.button("Compute orbit", type="primary"):
            try:
                seed = parse_seed(seed_text)
                with st.spinner("Enumerating orbit..."):
                    orbit, hit = cached_orbit(
                        seed, generators, config.cache_dir if use_cache else None, config.workers
                    )
                st.session_state.orbit = orbit
                st.success(f"{len(orbit)} origamis" + (" (from cache)" if hit else ""))
            except OrigamiError as e:
                st.error(f"{type(e).__name__}: {e}")

    tabs = ["Orbit", "Graph", "Census", "Invariants"]
    selected_tab = st.sidebar.radio("Navigation", tabs)

    orbit = st.session_state.orbit
    if orbit is None:
        st.info("Enter a seed in the sidebar and compute its orbit.")
        return

    try:
        if selected_tab == "Orbit":
            orbit_view(orbit)
        elif selected_tab == "Graph":
            graph_view(orbit)
        elif selected_tab == "Census":
            census_view(orbit, config.max_word_len)
        elif selected_tab == "Invariants":
            invariants_view(orbit)
    except OrigamiError as e:
        st.error(f"{type(e).__name__}: {e}")


def orbit_view(orbit):
    st.header("Orbit")

    col1, col2, col3 = st.columns(3)
    with col1:
        st.metric("Size", len(orbit))
    with col2:
        st.metric("Stratum", str(orbit.stratum))
    with col3:
        st.metric("Label", orbit.label or "-")

    rows = [
        {"#": i, "origami": str(m.origami), "digest": m.digest[:16]}
        for i, m in enumerate(orbit.members[:200])
    ]
    st.table(rows)
    if len(orbit) > 200:
        st.caption(f"First 200 of {len(orbit)} members.")

    st.download_button(
        label="Download members (CSV)",
        data=orbit_to_csv(orbit),
        file_name="orbit.csv",
        mime="text/csv",
    )
    st.download_button(
        label="Download orbit (JSON)",
        data=export_graph(orbit, "json"),
        file_name="orbit.json",
        mime="application/json",
    )


def graph_view(orbit):
    st.header("Orbit Graph")

    graph = create_report(orbit, "graph")
    cycles = cycle_census(graph, 4)

    col1, col2, col3 = st.columns(3)
    with col1:
        st.metric("Vertices", graph.number_of_nodes())
    with col2:
        st.metric("Edges", graph.number_of_edges())
    with col3:
        st.metric("Genus lower bound", genus_lower_bound(len(orbit), cycles))

    st.table([{"length": k, "cycles": v} for k, v in cycles.items()])

    dot = export_graph(orbit, "dot")
    if len(orbit) <= 60:
        st.graphviz_chart(dot)
    st.download_button(label="Download DOT", data=dot, file_name="orbit.dot", mime="text/plain")


def census_view(orbit, max_word_len):
    st.header("Census")

    max_len = st.slider("Maximum word length", 1, 6, value=max_word_len)
    words = create_report(orbit, "words", max_word_len=max_len)
    cusps = create_report(orbit, "cusps")
    words.cusps = cusps.cusps

    st.subheader("Fixed origamis per word")
    st.table([{"word": r.text, "kind": r.kind, "fixed": r.count} for r in words.words if r.count])

    st.subheader(f"Cusps ({len(cusps.cusps)})")
    for cusp in cusps.cusps:
        with st.expander(f"width {cusp.width}: {cusp.representative}", expanded=False):
            if cusp.h2_params:
                st.write(f"**Surface parameters:** {cusp.h2_params}")
            st.write(f"**Members:** {cusp.members}")

    st.download_button(
        label="Download census (CSV)",
        data=census_to_csv(words, orbit.label or ""),
        file_name="census.csv",
        mime="text/csv",
    )


def invariants_view(orbit):
    st.header("Invariants")

    X = orbit.origami(0)
    signature = stratum_and_genus(X)
    mono = monodromy_class(X)

    col1, col2, col3 = st.columns(3)
    with col1:
        st.metric("Genus", signature.genus)
    with col2:
        st.metric("Monodromy", str(mono))
    with col3:
        try:
            st.metric("HLK", hlk_invariant(X).label)
        except OrigamiError as e:
            st.metric("HLK", type(e).__name__)

    st.subheader("Teichmüller curve")
    try:
        curve = create_report(orbit, "curve")
        st.json(curve.to_json())
        st.download_button(
            label="Download curve invariants (JSON)",
            data=dumps(curve.to_json()),
            file_name="curve.json",
            mime="application/json",
        )
    except OrigamiError as e:
        st.warning(f"{type(e).__name__}: {e}")

    st.subheader("Block systems")
    report = create_report(orbit, "blocks")
    for check in report.checks:
        with st.expander(f"{check.name}: {check.status}", expanded=check.status == "fail"):
            if check.note:
                st.write(check.note)
            for violation in check.violations:
                st.write(f"- {violation}")


if __name__ == "__main__":
    main()
