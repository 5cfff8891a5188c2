"""
Поставляемые данные
"""
