# Generated by Django 5.2.4

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ReportRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('seed', models.BigIntegerField()),
                ('sections', models.TextField(blank=True, default='[]', help_text='JSON array of the sections that were run (empty for all)')),
                ('passed', models.BooleanField(default=False)),
                ('pass_count', models.PositiveIntegerField(default=0)),
                ('fail_count', models.PositiveIntegerField(default=0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created_at', '-id'],
            },
        ),
        migrations.CreateModel(
            name='ReportEntryRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('check_id', models.CharField(max_length=100)),
                ('section', models.CharField(max_length=20)),
                ('description', models.CharField(max_length=200)),
                ('paper_value', models.FloatField()),
                ('computed', models.FloatField(blank=True, null=True)),
                ('tolerance', models.FloatField()),
                ('status', models.CharField(choices=[('pass', 'Pass'), ('fail', 'Fail')], max_length=4)),
                ('note', models.TextField(blank=True, default='')),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='entries', to='reports.reportrun')),
            ],
            options={
                'ordering': ['run', 'check_id'],
            },
        ),
    ]
