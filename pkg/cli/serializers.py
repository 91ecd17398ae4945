from rest_framework import serializers

from .enums import Verdict


class ReportSerializer(serializers.Serializer):
    """
    ``{"command", "verdict", "residuals", "reason"?, "message"?, "witness"?, "result"?, "timing_ms"?}``.

    Optional fields are left out when unset, so that reports without ``--timing`` are byte-identical across runs.
    """
    command = serializers.CharField()
    verdict = serializers.ChoiceField(choices=Verdict.choices)
    residuals = serializers.DictField(child=serializers.FloatField())
    reason = serializers.CharField(required=False)
    message = serializers.CharField(required=False)
    witness = serializers.JSONField(required=False)
    result = serializers.JSONField(required=False)
    timing_ms = serializers.FloatField(required=False)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        return {key: value for key, value in data.items() if value is not None}
