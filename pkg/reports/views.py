import logging

from django.shortcuts import get_object_or_404
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from .models import ReportRun
from .report import run_report
from .serializers import ReportRequestSerializer, ReportRunListSerializer, ReportRunSerializer

logger = logging.getLogger(__name__)


@api_view(['GET'])
@permission_classes([AllowAny])
def report_run_list(request):
    """Persisted report runs, newest first"""
    runs = ReportRun.objects.all()
    return Response(ReportRunListSerializer(runs, many=True).data)


@api_view(['GET'])
@permission_classes([AllowAny])
def report_run_detail(request, pk):
    run = get_object_or_404(ReportRun.objects.prefetch_related('entries'), pk=pk)
    return Response(ReportRunSerializer(run).data)


@api_view(['GET'])
@permission_classes([AllowAny])
def report_run_fresh(request):
    """
    GET: compute a report now
    Query params: filter (repeatable section name), seed, save
    """
    serializer = ReportRequestSerializer(data=request.query_params)
    if not serializer.is_valid():
        return Response(serializer.errors, status=400)
    data = serializer.validated_data
    sections = sorted(data.get('filter') or [])
    result = run_report(sections=sections or None, seed=data.get('seed'))
    payload = result.as_dict()
    if data['save']:
        run = ReportRun.record(result, sections)
        payload['run_id'] = run.id
        logger.info(f"Saved report run {run.id}")
    return Response(payload)
