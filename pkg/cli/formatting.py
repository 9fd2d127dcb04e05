"""Texto y filas CSV a partir del JSON ya serializado (el mismo venga o no de la caché)."""
from chartable.serializers import ColoredPartitionSerializer, label_text
from cyclotomic.serializers import CycloSerializer


def label_from_json(raw) -> str:
    serializer = ColoredPartitionSerializer(data=raw)
    serializer.is_valid(raise_exception=True)
    return label_text(serializer.validated_data)


def cyclo_from_json(raw) -> str:
    serializer = CycloSerializer(data=raw)
    serializer.is_valid(raise_exception=True)
    return serializer.save().to_string()


def table_rows(data: dict) -> list[list]:
    header = ['character', 'degree'] + [label_from_json(c['label']) for c in data['classes']]
    rows = [header, ['centralizer', ''] + [c['centralizer'] for c in data['classes']],
            ['size', ''] + [c['size'] for c in data['classes']]]
    for char, values in zip(data['characters'], data['values']):
        rows.append([label_from_json(char['label']), char['degree']] + [cyclo_from_json(v) for v in values])
    return rows


def columns(rows: list[list]) -> str:
    """Alinea filas en columnas separadas por dos espacios."""
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells if i < len(row)) for i in range(max(map(len, cells)))]
    return '\n'.join('  '.join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells)


def table_text(data: dict) -> str:
    title = (f'GL_{data["n"]}(F_{data["q"]}): {len(data["classes"])} clases, '
             f'conductor {data["conductor"]}')
    return f'{title}\n\n{columns(table_rows(data))}'
