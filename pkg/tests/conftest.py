import functools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hochcat.catalog import backend_config, build_backend, build_builtin
from hochcat.exactlin import field_for


@functools.lru_cache(maxsize=None)
def catalog_algebra(name: str, p: int):
    """Builtin algebra over the field of characteristic p, shared across tests."""
    return build_builtin(name, build_backend(backend_config(name), field_for(p)))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
