from src.conf.config import settings


def text(message: dict, /, **values) -> str:
    """
    Render a bilingual message in the configured language.

    Args:
        message: A dict with "en" and "ua" templates.
        **values: Placeholder values for str.format.

    Returns:
        The formatted message, falling back to English.

    >>> text({"en": "size {n}", "ua": "розмір {n}"}, n=3)
    'size 3'
    >>> text({"en": "{message}!", "ua": "{message}!"}, message="done")
    'done!'
    """
    template = message.get(settings.LANG) or message.get("en")
    return template.format(**values)


# Structure and parameters
table_shape_invalid = {
    "en": "Table '{table}' must be {size}x{size}",
    "ua": "Таблиця '{table}' повинна мати розмір {size}x{size}",
}

semiring_invalid = {
    "en": "Semiring '{semiring}' violates {axiom} at ({witness}); run 'axioms' for the full report",
    "ua": "Напівкільце '{semiring}' порушує аксіому {axiom} на ({witness}); запустіть 'axioms' для повного звіту",
}

table_entry_out_of_range = {
    "en": "Entry {table}[{row}][{col}] = {value} is outside 0..{last}",
    "ua": "Елемент {table}[{row}][{col}] = {value} поза межами 0..{last}",
}

element_out_of_range = {
    "en": "Element id {value} is outside the carrier 0..{last}",
    "ua": "Ідентифікатор елемента {value} поза носієм 0..{last}",
}

unknown_element = {
    "en": "Unknown element '{label}' in semiring '{semiring}'",
    "ua": "Невідомий елемент '{label}' у напівкільці '{semiring}'",
}

builtin_unknown = {
    "en": "Unknown builtin semiring kind '{kind}'",
    "ua": "Невідомий вбудований тип напівкільця '{kind}'",
}

builtin_parameter = {
    "en": "Builtin '{kind}' needs a parameter >= {minimum}, got {value}",
    "ua": "Вбудований тип '{kind}' потребує параметр >= {minimum}, отримано {value}",
}

parameter_range = {
    "en": "Parameter '{name}' must be >= {minimum}, got {value}",
    "ua": "Параметр '{name}' повинен бути >= {minimum}, отримано {value}",
}

bound_exceeded = {
    "en": "{what} {value} exceeds the configured bound {bound}",
    "ua": "{what} {value} перевищує встановлену межу {bound}",
}

# Relations and congruences
owner_mismatch = {
    "en": "Operands live on different semirings ('{left}' and '{right}')",
    "ua": "Операнди належать різним напівкільцям ('{left}' та '{right}')",
}

not_an_equivalence = {
    "en": "Relation on '{semiring}' is not an equivalence",
    "ua": "Відношення на '{semiring}' не є еквівалентністю",
}

not_a_congruence = {
    "en": "Partition on '{semiring}' is not compatible: {witness}",
    "ua": "Розбиття на '{semiring}' не сумісне з операціями: {witness}",
}

not_an_ideal = {
    "en": "Subset {members} of '{semiring}' is not an ideal",
    "ua": "Підмножина {members} напівкільця '{semiring}' не є ідеалом",
}

improper_quotient = {
    "en": "Quotient by the improper congruence would force 1 = 0",
    "ua": "Фактор за невласною конгруенцією змусив би 1 = 0",
}

not_prime = {
    "en": "Congruence on '{semiring}' is not prime",
    "ua": "Конгруенція на '{semiring}' не є простою",
}

partition_duplicate = {
    "en": "Element '{label}' appears in more than one class",
    "ua": "Елемент '{label}' входить до кількох класів",
}

generation_enlarged = {
    "en": "Congruence '{name}' was enlarged by generation from {given} to {total} pairs",
    "ua": "Конгруенцію '{name}' розширено породженням з {given} до {total} пар",
}

spectrum_kind_unknown = {
    "en": "Unknown spectrum kind '{kind}'",
    "ua": "Невідомий тип спектра '{kind}'",
}

# Polynomials and geometry
arity_mismatch = {
    "en": "Expected {expected} variables, got {actual}",
    "ua": "Очікувалося змінних: {expected}, отримано: {actual}",
}

embedding_invalid = {
    "en": "'{coeff}' does not embed into '{target}': {reason}",
    "ua": "'{coeff}' не вкладається в '{target}': {reason}",
}

empty_system = {
    "en": "A system of polynomial equations needs at least one pair",
    "ua": "Система поліноміальних рівнянь потребує хоча б однієї пари",
}

window_complement = {
    "en": "Window mode covers only 0..{window}; '{operation}' needs the whole carrier",
    "ua": "Режим вікна охоплює лише 0..{window}; '{operation}' потребує всього носія",
}

window_system_shape = {
    "en": "Window-mode radicals accept only pairs (monomial, 0)",
    "ua": "Радикали в режимі вікна приймають лише пари (моном, 0)",
}

window_claim = {
    "en": "verified for all values <= {window}",
    "ua": "перевірено для всіх значень <= {window}",
}

degree_cap_missing = {
    "en": "A degree cap >= 0 must be supplied",
    "ua": "Потрібно задати обмеження степеня >= 0",
}

degree_cap_uninformative = {
    "en": "Degree cap {cap} reaches {reached} of {total} functions; equality is only indicative",
    "ua": "Обмеження степеня {cap} охоплює {reached} з {total} функцій; рівність лише орієнтовна",
}

nullstellensatz_violation = {
    "en": "Nullstellensatz inclusion failed on {left} ~ {right}: probable implementation bug",
    "ua": "Включення Нульштелензаца порушено на {left} ~ {right}: ймовірна помилка реалізації",
}

search_idempotent_bug = {
    "en": "Maximal non-prime congruence in an additively idempotent sample: probable implementation bug",
    "ua": "Максимальна непроста конгруенція в адитивно ідемпотентному зразку: ймовірна помилка реалізації",
}

search_attempts_exhausted = {
    "en": "No semiring of size {size} found after {attempts} attempts",
    "ua": "Не знайдено напівкільця розміру {size} після {attempts} спроб",
}

# Script language
parse_unexpected = {
    "en": "Unexpected {found}, expected {expected}",
    "ua": "Неочікуване {found}, очікувалося {expected}",
}

parse_location = {
    "en": "line {line}, column {column}: {message}",
    "ua": "рядок {line}, стовпець {column}: {message}",
}

undefined_name = {
    "en": "Undefined {kind} '{name}'",
    "ua": "Невизначений об'єкт {kind} '{name}'",
}

duplicate_name = {
    "en": "Name '{name}' is already declared",
    "ua": "Ім'я '{name}' вже оголошено",
}

table_incomplete = {
    "en": "Table '{table}' of '{semiring}' misses entry {left} {right}",
    "ua": "У таблиці '{table}' напівкільця '{semiring}' бракує елемента {left} {right}",
}

table_conflict = {
    "en": "Table '{table}' of '{semiring}' gives {left} {right} twice with different values",
    "ua": "Таблиця '{table}' напівкільця '{semiring}' задає {left} {right} двічі з різними значеннями",
}

identity_missing = {
    "en": "Semiring '{semiring}' declares no {which} element",
    "ua": "Напівкільце '{semiring}' не оголошує елемент {which}",
}

modulus_outside_naturals = {
    "en": "'mod' congruences are declared on a naturals semiring, not on '{semiring}'",
    "ua": "Конгруенції 'mod' оголошуються на напівкільці натуральних чисел, а не на '{semiring}'",
}

naturals_literal = {
    "en": "Congruences on the naturals are declared as 'mod m' with m >= 1",
    "ua": "Конгруенції на натуральних числах оголошуються як 'mod m' з m >= 1",
}

nothing_declared = {
    "en": "Script declares no {kind}",
    "ua": "Скрипт не оголошує жодного об'єкта {kind}",
}

option_missing = {
    "en": "Command '{command}' needs option '{option}'",
    "ua": "Команда '{command}' потребує параметр '{option}'",
}

command_unknown = {
    "en": "Unknown command '{command}'",
    "ua": "Невідома команда '{command}'",
}

# Schema descriptions
schema_script = {
    "en": "Workbench script text",
    "ua": "Текст скрипта робочого середовища",
}

schema_command = {
    "en": "Command to run against the script",
    "ua": "Команда для виконання над скриптом",
}

schema_passed = {
    "en": "True when no axiom is violated",
    "ua": "Істина, якщо жодна аксіома не порушена",
}

schema_violations = {
    "en": "Violated axioms with one witness tuple each",
    "ua": "Порушені аксіоми з одним свідком кожна",
}

schema_window = {
    "en": "Window bound when the carrier is the naturals",
    "ua": "Межа вікна, якщо носієм є натуральні числа",
}

passed_flag_mismatch = {
    "en": "passed must be true exactly when there are no violations",
    "ua": "passed має бути істинним саме тоді, коли порушень немає",
}

# HTTP surface
api_root = {
    "en": "Semiring congruence workbench API v1.0",
    "ua": "API робочого середовища конгруенцій напівкілець v1.0",
}

api_healthy = {
    "en": "Workbench is ready",
    "ua": "Робоче середовище готове",
}

api_unhealthy = {
    "en": "Builtin semirings failed validation",
    "ua": "Вбудовані напівкільця не пройшли перевірку",
}
