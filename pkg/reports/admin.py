from django.contrib import admin
from .models import ReportRun, ReportEntryRecord


class ReportEntryInline(admin.TabularInline):
    model = ReportEntryRecord
    extra = 0
    fields = ['check_id', 'status', 'paper_value', 'computed', 'tolerance', 'note']
    readonly_fields = fields
    can_delete = False


@admin.register(ReportRun)
class ReportRunAdmin(admin.ModelAdmin):
    list_display = ['id', 'seed', 'passed', 'pass_count', 'fail_count', 'created_at']
    list_filter = ['passed', 'created_at']
    ordering = ['-created_at']
    inlines = [ReportEntryInline]

    fieldsets = (
        ('Run', {
            'fields': ('seed', 'sections')
        }),
        ('Outcome', {
            'fields': ('passed', 'pass_count', 'fail_count')
        }),
        ('Timestamps', {
            'fields': ('created_at',),
            'classes': ('collapse',)
        }),
    )

    readonly_fields = ['seed', 'sections', 'passed', 'pass_count', 'fail_count', 'created_at']


@admin.register(ReportEntryRecord)
class ReportEntryRecordAdmin(admin.ModelAdmin):
    list_display = ['check_id', 'section', 'status', 'paper_value', 'computed', 'run']
    list_filter = ['section', 'status']
    search_fields = ['check_id', 'description']
