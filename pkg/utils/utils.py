import pandas as pd

from hypercomplex import basis_name


def entry_label(sign: int, index: int, names: bool) -> str:
    """Text of a signed basis element as a table cell: 1, -1, k, -e5."""
    label = "1" if index == 0 else basis_name(index, names)
    return label if sign > 0 else f"-{label}"


def table_frame(table, names: bool = False) -> pd.DataFrame:
    """Imaginary block of a basis table; rows are left factors, columns right factors."""
    units = range(1, table.dim)
    labels = [basis_name(t, names) for t in units]
    cells = [[entry_label(*table.entry(s, t), names) for t in units] for s in units]
    return pd.DataFrame(cells, index=labels, columns=labels)


def mark(flag: bool) -> str:
    return "yes" if flag else "no"


def matrix_frame(matrix) -> pd.DataFrame:
    """One row per level, yes/no per property."""
    rows = []
    for row in matrix.rows:
        rows.append({name: mark(flag) for name, flag in zip(matrix.property_names, row.flags())})
    return pd.DataFrame(rows, index=pd.Index([row.level for row in matrix.rows], name="level"))


def implications_frame(matrix) -> pd.DataFrame:
    records = [
        {
            "item": check.item,
            "levels": f"{check.level}->{check.level + 1}",
            "premise": mark(check.premise),
            "conclusion": mark(check.conclusion),
            "holds": mark(check.holds),
        }
        for check in matrix.implications
    ]
    return pd.DataFrame(records)


def records_frame(records: list, columns: list) -> pd.DataFrame:
    """Frame of flat report dicts, restricted to the given columns in order."""
    return pd.DataFrame(records, columns=columns)
