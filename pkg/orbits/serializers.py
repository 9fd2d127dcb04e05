from rest_framework import serializers

from glchars.exceptions import GLCharsError

from .orbits import KINDS, Orbit, canonical_orbit


class OrbitSerializer(serializers.Serializer):
    """{"kind", "q", "d", "rep"}; al validar se canoniza rep al mínimo de su clase."""
    kind = serializers.ChoiceField(choices=KINDS)
    q    = serializers.IntegerField(min_value=2)
    d    = serializers.IntegerField(min_value=1, source='degree')
    rep  = serializers.IntegerField()

    def validate(self, data):
        try:
            data['orbit'] = canonical_orbit(data['kind'], data['q'], data['degree'], data['rep'])
        except GLCharsError as exc:
            raise serializers.ValidationError(str(exc))
        return data

    def create(self, validated_data) -> Orbit:
        return validated_data['orbit']


class PolynomialOrbitSerializer(serializers.Serializer):
    """Órbita de valores dada por su polinomio mínimo, coeficientes de menor a mayor grado."""
    q    = serializers.IntegerField(min_value=2)
    poly = serializers.ListField(child=serializers.IntegerField(min_value=0), min_length=2)

    def validate(self, data):
        from .fields import orbit_of_polynomial

        try:
            data['orbit'] = orbit_of_polynomial(data['poly'], q=data['q'])
        except GLCharsError as exc:
            raise serializers.ValidationError(str(exc))
        return data

    def create(self, validated_data) -> Orbit:
        return validated_data['orbit']
