"""
Командная строка EpiCausal.

Содержит:
- main.py - разбор аргументов и обработка ошибок верхнего уровня
- commands/ - подкоманды check, translate, deps, team-check, equiv, gen, dependence
- oracles.py - оракулы для случайных проверок свойств
"""
