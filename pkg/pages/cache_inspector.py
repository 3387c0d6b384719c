import time

import streamlit as st

from utils.cache import drop_cache_file, list_cache, load_orbit
from utils.config import RunConfig
from utils.errors import OrigamiError


def format_time(timestamp):
    """Readable local time for a unix timestamp"""
    if not timestamp:
        return "never"
    return time.strftime("%d.%m.%Y %H:%M:%S", time.localtime(timestamp))


def format_cache_age(age_seconds):
    """Cache age in seconds, minutes or hours"""
    if age_seconds is None:
        return "never"
    if age_seconds < 60:
        return f"{age_seconds:.0f} seconds ago"
    elif age_seconds < 3600:
        return f"{age_seconds/60:.1f} minutes ago"
    else:
        return f"{age_seconds/3600:.1f} hours ago"


def cache_inspector():
    st.set_page_config(page_title="Orbit Cache", page_icon="💾")

    st.title("💾 Orbit Cache")
    config = RunConfig()
    st.write(f"Cached orbits under `{config.cache_dir}`.")

    tabs = st.tabs(["💾 Cached orbits", "🔄 Session State", "🛠️ Settings"])

    with tabs[0]:
        rows = list_cache(config.cache_dir)
        if not rows:
            st.info("No orbit has been cached yet.")

        col1, col2 = st.columns(2)
        with col1:
            st.metric("Files", len(rows))
        with col2:
            st.metric("Size", f"{sum(r['bytes'] for r in rows) / 1024:.1f} KiB")

        filter_text = st.text_input("Filter by stratum or label:", "")
        if filter_text:
            needle = filter_text.lower()
            rows = [
                r for r in rows
                if needle in str(r.get("stratum", "")).lower() or needle in str(r.get("label", "")).lower()
            ]

        for row in rows:
            title = f"{row.get('stratum', '?')} n={row.get('n', '?')} {row.get('label') or ''} ({row.get('size', '?')})"
            with st.expander(title, expanded=False):
                st.write(f"**File:** {row['file']}")
                st.write(f"**Generators:** {row.get('generators', '?')}")
                st.write(f"**Written:** {format_cache_age(row['age_seconds'])}")
                col1, col2 = st.columns(2)
                with col1:
                    if st.button("Load into explorer", key=f"load_{row['file']}"):
                        try:
                            st.session_state.orbit = load_orbit(row["path"])
                            st.success("Loaded. Switch to the main page to inspect it.")
                        except OrigamiError as e:
                            st.error(f"{type(e).__name__}: {e}")
                with col2:
                    if st.button("🧹 Remove", key=f"drop_{row['file']}"):
                        drop_cache_file(config.cache_dir, row["file"])
                        st.success(f"Removed {row['file']}")
                        st.rerun()

    with tabs[1]:
        st.subheader("Session State")
        orbit = st.session_state.get("orbit")
        if orbit is None:
            st.info("No orbit in this session.")
        else:
            st.metric("Orbit size", len(orbit))
            st.write(f"**Seed digest:** {orbit.members[0].digest}")
        if st.button("🗑️ Clear session state", type="primary"):
            for key in list(st.session_state.keys()):
                del st.session_state[key]
            st.success("Session state cleared.")
            st.rerun()

    with tabs[2]:
        st.subheader("Settings")
        st.write(f"Loaded at {format_time(time.time())}")
        st.json(
            {
                "cache_dir": config.cache_dir,
                "brute_cap": config.brute_cap,
                "workers": config.workers,
                "max_word_len": config.max_word_len,
                "generators": config.generators,
            }
        )


if __name__ == "__main__":
    cache_inspector()
