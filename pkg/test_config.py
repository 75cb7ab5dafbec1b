import io

from barlens.config import color_enabled, get_settings


def test_color_setting(monkeypatch):
    monkeypatch.setenv("BARLENS_COLOR", "always")
    assert color_enabled(io.StringIO())
    monkeypatch.setenv("BARLENS_COLOR", "never")
    assert not color_enabled(io.StringIO())
    monkeypatch.setenv("BARLENS_COLOR", "auto")
    assert not color_enabled(io.StringIO())
    monkeypatch.setenv("BARLENS_COLOR", "sometimes")
    assert get_settings().color == "auto"


def test_settings_tolerate_bad_integers(monkeypatch):
    monkeypatch.setenv("BARLENS_JOBS", "lots")
    monkeypatch.setenv("BARLENS_HOOK_MAX_N", "12")
    settings = get_settings()
    assert settings.jobs == 1
    assert settings.hook_max_n == 12
