from fractions import Fraction

from rest_framework import serializers

from .cyclo import Cyclo, cyclotomic_field


class CycloSerializer(serializers.Serializer):
    """{"m": m, "coeffs": [[num, den], …]} en la base de potencias de ζ_m."""
    m      = serializers.IntegerField(min_value=1)
    coeffs = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField(), min_length=2, max_length=2),
    )

    def to_representation(self, instance: Cyclo):
        return {
            'm':      instance.m,
            'coeffs': [[c.numerator, c.denominator] for c in instance.coords],
        }

    def validate(self, data):
        field = cyclotomic_field(data['m'])
        if len(data['coeffs']) != field.degree:
            raise serializers.ValidationError(
                f'Se esperaban {field.degree} coordenadas para m={data["m"]}.'
            )
        if any(den == 0 for _, den in data['coeffs']):
            raise serializers.ValidationError('Denominador nulo.')
        return data

    def create(self, validated_data) -> Cyclo:
        field = cyclotomic_field(validated_data['m'])
        return field.from_coords(Fraction(num, den) for num, den in validated_data['coeffs'])
