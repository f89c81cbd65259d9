from app.resources.compare import compare, compare_estimate, fit_scaling_exponent, lower_order_terms
from app.resources.formulas import FIELD_KINDS, field_formula, field_params, formula, formula_keys
from app.resources.sampling import all_instances, exact_average, mean_counts, measure, random_instance, sample_average
from app.resources.tables import FORMULA_HEADER, Table, family_comparison, formula_row, formula_table, table1, table2

__all__ = [
    "FIELD_KINDS",
    "FORMULA_HEADER",
    "Table",
    "all_instances",
    "compare",
    "compare_estimate",
    "exact_average",
    "family_comparison",
    "field_formula",
    "field_params",
    "fit_scaling_exponent",
    "formula",
    "formula_keys",
    "formula_row",
    "formula_table",
    "lower_order_terms",
    "mean_counts",
    "measure",
    "random_instance",
    "sample_average",
    "table1",
    "table2",
]
