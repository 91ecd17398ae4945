from rest_framework import serializers

from algebra.serializers import AlgebraSerializer
from core.serializers import ComplexMatrixField, RealVectorField
from .functionals import TracialFunctional


class TraceSerializer(serializers.Serializer):
    """
    ``{"weights": [real, ...]}``; the algebra comes from the ``algebra`` context entry.
    """
    weights = RealVectorField(min_length=1)

    def validate_weights(self, value):
        algebra = self.context.get('algebra')
        if algebra is not None and len(value) != algebra.num_blocks:
            raise serializers.ValidationError(f'Expected {algebra.num_blocks} weights.')
        if any(w < 0 for w in value):
            raise serializers.ValidationError('Weights must be nonnegative.')
        return value

    def create(self, validated_data):
        return TracialFunctional(self.context['algebra'], validated_data['weights'])


class FunctionalSerializer(serializers.Serializer):
    """
    ``{"algebra": algebra, "coefficients": [matrix, ...]}``.
    """
    algebra = AlgebraSerializer()
    coefficients = serializers.ListField(child=ComplexMatrixField())


class TracialCheckSerializer(serializers.Serializer):
    tracial = serializers.BooleanField()
    positive = serializers.BooleanField()
    weights = RealVectorField()
    defect = serializers.FloatField()
