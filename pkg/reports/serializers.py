from rest_framework import serializers
from .models import ReportRun, ReportEntryRecord
from .checks import SECTIONS


class ReportEntryRecordSerializer(serializers.ModelSerializer):
    class Meta:
        model = ReportEntryRecord
        fields = ['check_id', 'section', 'description', 'paper_value', 'computed', 'tolerance', 'status', 'note']


class ReportRunListSerializer(serializers.ModelSerializer):
    """Minimal fields for list views"""
    sections = serializers.SerializerMethodField()

    class Meta:
        model = ReportRun
        fields = ['id', 'seed', 'sections', 'passed', 'pass_count', 'fail_count', 'created_at']

    def get_sections(self, obj):
        return obj.get_sections()


class ReportRunSerializer(ReportRunListSerializer):
    entries = ReportEntryRecordSerializer(many=True, read_only=True)

    class Meta(ReportRunListSerializer.Meta):
        fields = ReportRunListSerializer.Meta.fields + ['entries']


class ReportRequestSerializer(serializers.Serializer):
    """Query parameters of a fresh report run"""
    filter = serializers.MultipleChoiceField(choices=SECTIONS, required=False)
    seed = serializers.IntegerField(required=False, min_value=0)
    save = serializers.BooleanField(default=False)
