"""
Язык PAKC: интервенции, знание и публичные анонсы.

Содержит:
- formulas.py - AST, фрагменты, производные связки, формулы зависимостей
- parser.py - разбор и печать (lark)
- semantics.py - вычисление на моделях с указателем
- reduction.py - переводы tr1, tr2 и reduce
- axioms.py - экземпляры схем аксиом и проверки правил
"""
