import pytest


def _catalog_labels():
    import hypershell as hs
    return [e.label for e in hs.catalog()]


@pytest.mark.parametrize("label", _catalog_labels())
def test_catalog_type(label):
    import hypershell as hs
    entry = hs.parse_label(label)
    G = entry.build()
    assert str(hs.group_type(G)) == entry.type_string
    if entry.family == 'mostow':
        assert G.center_order() == entry.order_P


@pytest.mark.parametrize("label", _catalog_labels())
def test_catalog_field_and_na_index(label):
    import hypershell as hs
    entry = hs.parse_label(label)
    if entry.field is None:
        pytest.skip("{} has no tabulated trace field".format(label))
    G = entry.build()
    field = hs.trace_field(G)
    assert field.name == entry.field
    assert hs.signature_spectrum(G, field).na_index == entry.na_index


@pytest.mark.parametrize("label,name,na_index", [
                         ('Gamma(6,1/6)', 'Q(sqrt3)', 1),
                         ('Gamma(7,13/42)', 'Q(cos(2pi/21))', 2),
                         ('Gamma(12,1/4)', 'Q(sqrt3)', 0),
                         ])
def test_mostow_field_and_na_index(label, name, na_index):
    import hypershell as hs
    G = hs.build_group(label)
    field = hs.trace_field(G)
    assert field.name == name
    assert hs.signature_spectrum(G, field).na_index == na_index
