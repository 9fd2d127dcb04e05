"""
Números de Hall G^λ_{μν}(q).

Uso:
  python manage.py hall --lambda 1,1 --mu 1 --nu 1 --q 3          # 4
  python manage.py hall --lambda 2,1 --mu 1 --nu 1,1 --polynomial
"""
from cli.base import GLCharsCommand
from hall.constants import hall_G, hall_polynomial
from symfunc.green import to_string


class Command(GLCharsCommand):
    help = 'Constante de estructura del álgebra de Hall G^λ_{μν}(q)'
    command_name = 'hall'

    def add_arguments(self, parser):
        parser.add_argument('--lambda', dest='lam')
        parser.add_argument('--mu')
        parser.add_argument('--nu')
        parser.add_argument('--q', type=int)
        parser.add_argument('--polynomial', action='store_true', help='Imprime también el polinomio en q')
        self.add_format_argument(parser)

    def run(self, config, options):
        lam, mu, nu, q = config['lam'], config['mu'], config['nu'], config['q']
        value = hall_G(lam, mu, nu, q)
        data = {'lambda': list(lam), 'mu': list(mu), 'nu': list(nu), 'q': q, 'value': value}
        header = ['lambda', 'mu', 'nu', 'q', 'value']
        row = [lam.label(), mu.label(), nu.label(), q, value]
        text = str(value)
        if options['polynomial']:
            coeffs = list(hall_polynomial(lam, mu, nu))
            data['polynomial'] = coeffs
            header.append('polynomial')
            row.append(to_string(coeffs, 'q'))
            text = f'{value}\n{to_string(coeffs, "q")}'
        self.emit(config, data, pretty=lambda: text, rows=lambda: [header, row])
