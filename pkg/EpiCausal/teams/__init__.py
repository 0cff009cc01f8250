"""
Язык каузальных команд COD.

Содержит:
- formulas.py - AST и каузальные команды
- parser.py - разбор и печать (lark)
- evaluator.py - семантика команд
- translation.py - переводы e, tr и tr* в PAKC
- equivalence.py - сравнение семантики команд и переводов
"""
