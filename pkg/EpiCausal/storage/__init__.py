"""
Файлы моделей.

Содержит:
- model_file.py - pydantic-схемы, загрузка и запись моделей
- expressions.py - язык выражений структурных функций
"""
