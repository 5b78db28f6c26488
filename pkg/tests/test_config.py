import pytest

from molqubit.config import DEBYE_KVCM_MHZ, MoleculeConfig, convert_field, load_config, parse_config


def test_conversion_constant_by_hand():
    # 1 D = 3.33564095e-30 C m; 1 kV/cm = 1e5 V/m; h = 6.62607015e-34 J s
    by_hand = 3.33564095198152e-30 * 1e5 / 6.62607015e-34 / 1e6
    assert DEBYE_KVCM_MHZ == pytest.approx(by_hand, rel=1e-9)
    assert DEBYE_KVCM_MHZ == pytest.approx(503.41, abs=0.01)


def test_convert_field():
    assert convert_field(0.0, 1000.0, 5.0) == 0.0
    assert convert_field(1.0, 503.4, 2.0) == pytest.approx(2 * convert_field(1.0, 503.4, 1.0))
    assert convert_field(1.0, 503.4, 1.0) == pytest.approx(1.0, abs=1e-4)
    with pytest.raises(ValueError):
        convert_field(1.0, 0.0, 1.0)


def test_parse_config(tmp_path):
    text = """
    # KRb-like
    name = KRb
    B_e = 1113.95 MHz
    d = 0.574 Debye   # permanent dipole
    q = 0
    nmax = 12
    """
    cfg = parse_config(text)
    assert cfg == MoleculeConfig("KRb", 1113.95, "MHz", 0.574, "Debye", 0.0, "reduced", 12)
    assert cfg.eta_from_field(1.0) == pytest.approx(convert_field(0.574, 1113.95, 1.0))
    path = tmp_path / "mol.cfg"
    path.write_text(text)
    assert load_config(path) == cfg


@pytest.mark.parametrize(
    "text",
    [
        "B_e = -1",
        "d = 0\nq = 0",
        "colour = red",
        "B_e = 1 GHz",
        "d 1",
        "d = 1\nd = 2",
        "B_e = 1 MHz extra",
    ],
)
def test_parse_config_errors(text):
    with pytest.raises(ValueError):
        parse_config(text)


def test_field_conversion_needs_physical_units():
    with pytest.raises(ValueError):
        MoleculeConfig().eta_from_field(1.0)
