import os

DEFAULT_SIZE_CAP = 4096
DEFAULT_NODE_CAP = 10**8


def node_cap(default: int = DEFAULT_NODE_CAP) -> int:
    """Search-node cap, overridable through ``FALLGRAPH_NODE_CAP``."""
    raw = os.environ.get("FALLGRAPH_NODE_CAP")
    if raw is None or not raw.strip():
        return default
    return int(raw)
