def test_precision_bits(monkeypatch):
    import hypershell as hs
    from hypershell.core.constants import precision_bits
    monkeypatch.delenv('HYPERSHELL_PRECISION', raising=False)
    assert precision_bits() == hs.DEFAULT_PRECISION_BITS

    monkeypatch.setenv('HYPERSHELL_PRECISION', '512')
    assert precision_bits() == 512
    # an explicit value wins over the environment
    assert precision_bits(128) == 128

    monkeypatch.setenv('HYPERSHELL_PRECISION', 'lots')
    assert precision_bits() == hs.DEFAULT_PRECISION_BITS
