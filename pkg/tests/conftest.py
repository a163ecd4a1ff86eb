import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rpaclone.similarity import _backend

XAML_TEMPLATE = """<Activity xmlns="http://schemas.microsoft.com/netfx/2009/xaml/activities"
  xmlns:x="http://schemas.microsoft.com/winfx/2006/xaml"
  xmlns:ui="http://schemas.uipath.com/workflow/activities">
  <Sequence>{body}</Sequence>
</Activity>
"""


def make_xaml(activity_names: list[str]) -> str:
    """A minimal UiPath-style workflow with the given ui: activities."""
    body = "".join(f"<ui:{name}/>" for name in activity_names)
    return XAML_TEMPLATE.format(body=body)


def write_workflow(path: Path, activity_names: list[str]) -> None:
    path.write_text(make_xaml(activity_names), encoding="utf-8")


@pytest.fixture(params=["numpy", "numba"])
def kernel_backend(request, monkeypatch):
    """Run a test under both kernel backends."""
    name = request.param
    if name == "numba":
        kernels = pytest.importorskip("rpaclone.similarity._kernels_numba")
    else:
        from rpaclone.similarity import _kernels_numpy as kernels
    monkeypatch.setattr(_backend, "_kernels", kernels)
    return name
