from comfort_vitals.knowledge import KNOWLEDGE_ROWS, Level, knowledge_rows, knowledge_rows_for


def test_fourteen_rows_in_printed_order():
    rows = knowledge_rows()
    assert len(rows) == 14
    assert rows is KNOWLEDGE_ROWS
    assert rows[0].fabric_type == "Hydrophilic Cotton"
    assert rows[-1].fabric_type == "Cotton"


def test_every_row_carries_a_citation():
    assert all(row.reference.startswith("(") and row.reference.endswith(")") for row in knowledge_rows())
    assert [row.reference for row in knowledge_rows()].count("(Liya et al. 2007)") == 3
    assert [row.reference for row in knowledge_rows()].count("(Parvari, Aghaei et al. 2015)") == 4


def test_climate_cells_keep_dash_and_blank_apart():
    rows = knowledge_rows()
    assert (rows[0].temperature, rows[0].humidity) == ("-", "-")
    assert (rows[1].temperature, rows[1].humidity) == (None, None)


def test_moisture_regain_rows():
    (wool,) = knowledge_rows_for("wool")
    assert wool.heart_rate is Level.LOW
    assert (wool.temperature, wool.humidity) == ("30C", "50%")
    assert wool.reference == "(Kwon, Kato et al. 1998)"

    (polyester,) = knowledge_rows_for("low moisture regain")
    assert polyester.heart_rate is Level.HIGH


def test_lookup_is_case_insensitive():
    assert knowledge_rows_for("POLYESTER") == knowledge_rows_for("polyester")
    assert len(knowledge_rows_for("100% cotton")) == 3
    assert knowledge_rows_for("silk") == ()
