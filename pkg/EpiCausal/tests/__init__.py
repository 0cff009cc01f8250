"""
Тесты проекта "EpiCausal".

Содержит:
- test_causal.py, test_epistemic.py, test_validators.py - причинные и эпистемические модели
- test_formulas.py, test_parser.py, test_semantics.py - язык PAKC
- test_reduction.py, test_axioms.py - переводы и схемы аксиом
- test_team_semantics.py, test_translation.py, test_equivalence.py - язык COD
- test_model_file.py, test_expressions.py - файлы моделей
- test_generators.py, test_oracles.py, test_cli.py - генераторы и CLI
"""
